#ifndef SPECBOUND_NUMERICS_QUADRATURE_HPP
#define SPECBOUND_NUMERICS_QUADRATURE_HPP

#include <array>
#include <functional>
#include <span>
#include <vector>

namespace specbound::numerics {

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule, exact for polynomials of degree <= 2n - 1.
/// Nodes ascending and symmetric about 0; weights positive.
GaussRule gauss_legendre(int npts);

/// Point-doubling control for non-polynomial integrands.
struct QuadratureSetting {
  double rel_tol = 1e-12; ///< stop when successive estimates agree to this (relative to the L1 mass)
  int start_points = 8;
  int max_points = 2048;  ///< per panel; exceeding it raises NumericalError
};

struct QuadratureResult {
  double value = 0.0;
  int points = 0;      ///< point count of the accepted estimate
  double change = 0.0; ///< |I_n - I_{n/2}| at acceptance
};

/// Fixed-rule integral of f over [a, b].
double integrate_fixed(const std::function<double(double)>& f, double a, double b,
                       const GaussRule& rule);

/// Gauss-Legendre with the point count doubled until two successive values
/// agree to setting.rel_tol, measured against the integral of |f|.
QuadratureResult integrate_escalating(const std::function<double(double)>& f, double a,
                                      double b, const QuadratureSetting& setting = {});

/// Vector-valued variant: f(x, out) writes out.size() integrand components.
/// All components share one rule and must all pass the agreement test.
std::vector<double> integrate_escalating_vec(
    const std::function<void(double, std::span<double>)>& f, std::size_t components,
    double a, double b, const QuadratureSetting& setting = {}, int* points_used = nullptr,
    std::vector<double>* change = nullptr);

using Point2 = std::array<double, 2>;

/// Collapsed (Duffy) tensor Gauss rule on the triangle (a, b, c) using an
/// n x n product rule; exact for polynomials of total degree <= 2n - 2.
double integrate_triangle(const std::function<double(double, double)>& f, const Point2& a,
                          const Point2& b, const Point2& c, const GaussRule& rule);

} // namespace specbound::numerics

#endif // SPECBOUND_NUMERICS_QUADRATURE_HPP
