#ifndef SPECBOUND_COHOM1_PROFILE_HPP
#define SPECBOUND_COHOM1_PROFILE_HPP

#include <string>

#include "specbound/numerics/polynomial.hpp"

namespace specbound::cohom1 {

/// Warping profile of an SO(n)-invariant metric dt^2 + rho(t)^2 g_{S^{n-1}}
/// on S^n, written in the volume coordinate s = int_0^t rho^{n-1} in [0, 1]
/// with Phi(s) = rho(t(s)). The fibre is the unit-radius round sphere.
///
/// Two kinds:
///  - round: rho(t) = c sin(t / c), c fixed by the s-range being [0, 1];
///  - polynomial: Phi^n(s) = n s (1 - s) q(s) with q(0) = q(1) = 1 and
///    q > 0 on [0, 1], which pins (Phi^n)'(0) = n and (Phi^n)'(1) = -n.
class Profile {
public:
  /// Throws InputError for n < 2.
  static Profile round(int n);
  /// Throws InputError for n < 2 and InvalidGeometry when q violates its
  /// endpoint or positivity constraints (positivity sampled at 1001 points).
  static Profile polynomial(int n, numerics::Polynomial q);

  int n() const { return n_; }
  bool is_round() const { return round_; }
  const numerics::Polynomial& q() const { return q_; }
  /// Radius of the round profile (0 for polynomial profiles).
  double round_radius() const { return c_; }
  std::string describe() const;

  double phi(double s) const;
  /// d rho / dt at t(s), equal to (Phi^n)'(s) / n. Defined on [0, 1].
  double rho_dot(double s) const;
  /// d^2 rho / dt^2 at t(s) = (d/ds rho_dot) Phi^{n-1}.
  double rho_ddot(double s) const;
  /// Coefficient Phi^{2n-2} of the invariant Laplacian in the s coordinate.
  double laplacian_weight(double s) const;
  /// Phi(s) = Phi(1 - s) identically.
  bool mirror_symmetric() const;

private:
  Profile() = default;
  double theta(double s) const; // round profile: t / c as a function of s
  double phi_power(double s) const; // Phi^n, polynomial profiles only

  int n_ = 2;
  bool round_ = false;
  numerics::Polynomial q_;
  numerics::Polynomial dg_;  // (Phi^n)'
  numerics::Polynomial ddg_; // (Phi^n)''
  double c_ = 0.0;
  double total_ = 0.0; // int_0^pi sin^{n-1}
};

double rho_dot(const Profile& profile, double s);

/// Scalar curvature
///   Scal = -2(n-1) rho''/rho + (n-1)(n-2)(1 - rho'^2)/rho^2
/// at an interior s; rejects |s|, |1-s| < 1e-9.
double scalar_curvature_profile(const Profile& profile, double s);

/// Upper envelope for Phi under non-negative scalar curvature:
/// (n s)^{1/n} on [0, 1/2], mirrored on [1/2, 1].
double phi_max(int n, double s);

} // namespace specbound::cohom1

#endif // SPECBOUND_COHOM1_PROFILE_HPP
