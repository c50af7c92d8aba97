#ifndef SPECBOUND_NUMERICS_POLYNOMIAL_HPP
#define SPECBOUND_NUMERICS_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace specbound::numerics {

/// Dense univariate polynomial, coeffs[i] multiplies x^i.
///
/// Trailing zero coefficients are allowed in storage; degree() reports the
/// index of the last nonzero coefficient and -1 for the zero polynomial.
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(std::initializer_list<double> coeffs) : coeffs_(coeffs) {}
  explicit Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {}

  static Polynomial monomial(int power, double scale = 1.0);

  int degree() const;
  bool is_zero() const { return degree() < 0; }
  std::span<const double> coeffs() const { return coeffs_; }
  double coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0.0; }

  /// Horner evaluation.
  double operator()(double x) const;

  Polynomial derivative() const;
  /// Antiderivative with zero constant term.
  Polynomial antiderivative() const;
  /// p(offset + scale * x).
  Polynomial compose_affine(double offset, double scale) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(double s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, double s) { return a *= s; }
  friend Polynomial operator*(double s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

private:
  std::vector<double> coeffs_;
};

Polynomial poly_derivative(const Polynomial& p);

/// The unique rho with rho'' = q and rho(xstar) = rho'(xstar) = 0.
///
/// Integration is carried out in the shifted variable y = x - xstar and the
/// result shifted back, so the centre conditions hold to rounding.
Polynomial poly_double_antiderivative_centered(const Polynomial& q, double xstar);

/// Exact integral of p over [a, b]. Throws InputError when a > b.
double poly_integrate_interval(const Polynomial& p, double a, double b);

} // namespace specbound::numerics

#endif // SPECBOUND_NUMERICS_POLYNOMIAL_HPP
