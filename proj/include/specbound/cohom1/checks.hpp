#ifndef SPECBOUND_COHOM1_CHECKS_HPP
#define SPECBOUND_COHOM1_CHECKS_HPP

#include "specbound/cohom1/profile.hpp"
#include "specbound/exec.hpp"

namespace specbound::cohom1 {

/// Interior cut-off for curvature sampling: Scal is evaluated on
/// [kPoleMargin, 1 - kPoleMargin].
inline constexpr double kPoleMargin = 1e-6;

struct Lemma3Report {
  double min_scal = 0.0;
  double max_abs_rho_dot = 0.0;
  int grid = 0;
  /// max|rho'| > 1 + 1e-8 implies min Scal < 0.
  bool implication_holds = true;
};

/// Samples Scal on `grid` interior points and |rho'| on the same points plus
/// both poles. Throws InputError for grid < 100.
Lemma3Report check_lemma3(const Profile& profile, int grid, Exec exec = Exec::parallel);

struct Lemma4Report {
  double max_excess = 0.0; ///< max_s Phi(s) - phi_max(n, s)
  int grid = 0;
};

/// Phi against its envelope on s = i / grid, i = 0..grid.
Lemma4Report check_lemma4(const Profile& profile, int grid = 1000, Exec exec = Exec::parallel);

} // namespace specbound::cohom1

#endif // SPECBOUND_COHOM1_CHECKS_HPP
