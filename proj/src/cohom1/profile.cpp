#include "specbound/cohom1/profile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "specbound/errors.hpp"

namespace specbound::cohom1 {

using numerics::Polynomial;

namespace {

// int_0^theta sin^m, by the reduction formula.
double sine_power_integral(int m, double theta) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  double even = theta;                                          // I_0
  double odd = 2.0 * std::sin(0.5 * theta) * std::sin(0.5 * theta); // I_1 = 1 - cos
  if (m == 0)
    return even;
  if (m == 1)
    return odd;
  double cur = 0.0;
  for (int j = 2; j <= m; ++j) {
    const double prev = (j % 2 == 0) ? even : odd;
    cur = -std::pow(s, j - 1) * c / j + (j - 1.0) / j * prev;
    if (j % 2 == 0)
      even = cur;
    else
      odd = cur;
  }
  return cur;
}

} // namespace

Profile Profile::round(int n) {
  if (n < 2)
    throw InputError("sphere dimension must be >= 2");
  Profile p;
  p.n_ = n;
  p.round_ = true;
  p.total_ = sine_power_integral(n - 1, std::numbers::pi);
  p.c_ = std::pow(p.total_, -1.0 / n);
  return p;
}

Profile Profile::polynomial(int n, Polynomial q) {
  if (n < 2)
    throw InputError("sphere dimension must be >= 2");
  if (q.is_zero())
    throw InvalidGeometry("profile polynomial q must not vanish");
  if (std::abs(q(0.0) - 1.0) > 1e-12 || std::abs(q(1.0) - 1.0) > 1e-12)
    throw InvalidGeometry("profile polynomial must satisfy q(0) = q(1) = 1");
  for (int i = 0; i <= 1000; ++i)
    if (!(q(i / 1000.0) > 0.0))
      throw InvalidGeometry("profile polynomial q must be positive on [0, 1]");
  Profile p;
  p.n_ = n;
  p.round_ = false;
  p.q_ = std::move(q);
  p.dg_ = (Polynomial{0.0, static_cast<double>(n), -static_cast<double>(n)} * p.q_).derivative();
  p.ddg_ = p.dg_.derivative();
  return p;
}

std::string Profile::describe() const {
  std::ostringstream os;
  os.precision(17);
  if (round_) {
    os << "round n=" << n_ << " radius=" << c_;
  } else {
    os << "polynomial n=" << n_ << " q=";
    for (std::size_t i = 0; i < q_.coeffs().size(); ++i)
      os << (i ? "," : "") << q_.coeffs()[i];
  }
  return os.str();
}

double Profile::theta(double s) const {
  // Solve c^n I_{n-1}(theta) = s on [0, pi]: safeguarded Newton.
  if (s <= 0.0)
    return 0.0;
  if (s >= 1.0)
    return std::numbers::pi;
  const double cn = 1.0 / total_;
  double lo = 0.0;
  double hi = std::numbers::pi;
  double th = std::numbers::pi * s;
  for (int iter = 0; iter < 200; ++iter) {
    const double f = cn * sine_power_integral(n_ - 1, th) - s;
    if (f > 0.0)
      hi = th;
    else
      lo = th;
    const double df = cn * std::pow(std::sin(th), n_ - 1);
    double next = df > 0.0 ? th - f / df : 0.5 * (lo + hi);
    if (!(next > lo && next < hi))
      next = 0.5 * (lo + hi);
    if (std::abs(next - th) <= 1e-16 * std::max(1.0, th) || hi - lo <= 1e-16)
      return next;
    th = next;
  }
  return th;
}

double Profile::phi_power(double s) const {
  // Factored so the poles give exact zeros; the expanded product leaves ~1e-16
  // there, which the n-th root inflates.
  return std::max(0.0, n_ * s * (1.0 - s) * q_(s));
}

double Profile::phi(double s) const {
  if (round_)
    return c_ * std::sin(theta(s));
  return std::pow(phi_power(s), 1.0 / n_);
}

double Profile::rho_dot(double s) const {
  if (round_)
    return std::cos(theta(s));
  return dg_(s) / n_;
}

double Profile::rho_ddot(double s) const {
  if (round_)
    return -std::sin(theta(s)) / c_;
  return ddg_(s) / n_ * std::pow(phi(s), n_ - 1);
}

double Profile::laplacian_weight(double s) const {
  if (round_)
    return std::pow(phi(s), 2 * n_ - 2);
  return std::pow(phi_power(s), (2.0 * n_ - 2.0) / n_);
}

bool Profile::mirror_symmetric() const {
  if (round_)
    return true;
  const Polynomial reflected = q_.compose_affine(1.0, -1.0);
  const std::size_t m = std::max(reflected.coeffs().size(), q_.coeffs().size());
  for (std::size_t i = 0; i < m; ++i)
    if (std::abs(reflected.coeff(i) - q_.coeff(i)) > 1e-12 * (1.0 + std::abs(q_.coeff(i))))
      return false;
  return true;
}

double rho_dot(const Profile& profile, double s) {
  if (s < 0.0 || s > 1.0)
    throw InputError("rho_dot: s must lie in [0, 1]");
  return profile.rho_dot(s);
}

double scalar_curvature_profile(const Profile& profile, double s) {
  if (!(s >= 1e-9 && 1.0 - s >= 1e-9))
    throw InputError("scalar curvature is evaluated only at interior s (away from the poles)");
  const int n = profile.n();
  const double rho = profile.phi(s);
  const double rd = profile.rho_dot(s);
  const double rdd = profile.rho_ddot(s);
  return -2.0 * (n - 1) * rdd / rho + (n - 1.0) * (n - 2.0) * (1.0 - rd * rd) / (rho * rho);
}

double phi_max(int n, double s) {
  if (n < 2)
    throw InputError("phi_max: n must be >= 2");
  if (s < 0.0 || s > 1.0)
    throw InputError("phi_max: s must lie in [0, 1]");
  const double arm = s <= 0.5 ? s : 1.0 - s;
  return std::pow(n * arm, 1.0 / n);
}

} // namespace specbound::cohom1
