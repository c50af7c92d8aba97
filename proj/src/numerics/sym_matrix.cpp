#include "specbound/numerics/sym_matrix.hpp"

#include "specbound/errors.hpp"

namespace specbound::numerics {

SymMatrix SymMatrix::identity(std::size_t order) {
  SymMatrix m(order);
  for (std::size_t i = 0; i < order; ++i)
    m(i, i) = 1.0;
  return m;
}

SymMatrix& SymMatrix::operator*=(double s) {
  for (auto& v : a_)
    v *= s;
  return *this;
}

double SymMatrix::bilinear(const std::vector<double>& x, const std::vector<double>& y) const {
  if (x.size() != n_ || y.size() != n_)
    throw InputError("SymMatrix::bilinear: vector length does not match order");
  double acc = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      acc += x[i] * (*this)(i, j) * y[j];
  return acc;
}

std::vector<double> SymMatrix::dense() const {
  std::vector<double> d(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      d[i * n_ + j] = (*this)(i, j);
  return d;
}

} // namespace specbound::numerics
