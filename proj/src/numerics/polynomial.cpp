#include "specbound/numerics/polynomial.hpp"

#include <algorithm>

#include "specbound/errors.hpp"

namespace specbound::numerics {

Polynomial Polynomial::monomial(int power, double scale) {
  std::vector<double> c(static_cast<std::size_t>(power) + 1, 0.0);
  c.back() = scale;
  return Polynomial(std::move(c));
}

int Polynomial::degree() const {
  for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i)
    if (coeffs_[i] != 0.0)
      return i;
  return -1;
}

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1)
    return Polynomial{};
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d[i - 1] = static_cast<double>(i) * coeffs_[i];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::antiderivative() const {
  std::vector<double> a(coeffs_.size() + 1, 0.0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    a[i + 1] = coeffs_[i] / static_cast<double>(i + 1);
  return Polynomial(std::move(a));
}

Polynomial Polynomial::compose_affine(double offset, double scale) const {
  // Horner with polynomial accumulator: acc = acc * (offset + scale x) + c_i.
  const Polynomial lin{offset, scale};
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * lin;
    acc += Polynomial{*it};
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size())
    coeffs_.resize(other.coeffs_.size(), 0.0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
    coeffs_[i] += other.coeffs_[i];
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size())
    coeffs_.resize(other.coeffs_.size(), 0.0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
    coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Polynomial& Polynomial::operator*=(double s) {
  for (auto& c : coeffs_)
    c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty())
    return Polynomial{};
  std::vector<double> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial poly_derivative(const Polynomial& p) { return p.derivative(); }

Polynomial poly_double_antiderivative_centered(const Polynomial& q, double xstar) {
  if (q.is_zero())
    return Polynomial{};
  const Polynomial shifted = q.compose_affine(xstar, 1.0);
  const Polynomial rho_shifted = shifted.antiderivative().antiderivative();
  if (xstar == 0.0)
    return rho_shifted;
  return rho_shifted.compose_affine(-xstar, 1.0);
}

double poly_integrate_interval(const Polynomial& p, double a, double b) {
  if (a > b)
    throw InputError("poly_integrate_interval: lower limit exceeds upper limit");
  const Polynomial anti = p.antiderivative();
  return anti(b) - anti(a);
}

} // namespace specbound::numerics
