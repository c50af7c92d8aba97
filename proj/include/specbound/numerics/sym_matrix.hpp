#ifndef SPECBOUND_NUMERICS_SYM_MATRIX_HPP
#define SPECBOUND_NUMERICS_SYM_MATRIX_HPP

#include <cstddef>
#include <vector>

namespace specbound::numerics {

/// Symmetric matrix with packed lower-triangle storage, so (i,j) and (j,i)
/// always address the same value.
class SymMatrix {
public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t order) : n_(order), a_(order * (order + 1) / 2, 0.0) {}

  static SymMatrix identity(std::size_t order);

  std::size_t order() const { return n_; }

  double operator()(std::size_t i, std::size_t j) const { return a_[index(i, j)]; }
  double& operator()(std::size_t i, std::size_t j) { return a_[index(i, j)]; }

  SymMatrix& operator*=(double s);
  friend SymMatrix operator*(SymMatrix m, double s) { return m *= s; }

  /// x^T A y
  double bilinear(const std::vector<double>& x, const std::vector<double>& y) const;

  /// Dense row-major copy.
  std::vector<double> dense() const;

private:
  static std::size_t index(std::size_t i, std::size_t j) {
    return i >= j ? i * (i + 1) / 2 + j : j * (j + 1) / 2 + i;
  }

  std::size_t n_ = 0;
  std::vector<double> a_;
};

} // namespace specbound::numerics

#endif // SPECBOUND_NUMERICS_SYM_MATRIX_HPP
