#include "specbound/cohom1/checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "specbound/errors.hpp"

namespace specbound::cohom1 {

Lemma3Report check_lemma3(const Profile& profile, int grid, Exec exec) {
  if (grid < 100)
    throw InputError("gradient check needs a grid of at least 100 points");
  double min_scal = std::numeric_limits<double>::infinity();
  double max_rd = std::max(std::abs(profile.rho_dot(0.0)), std::abs(profile.rho_dot(1.0)));
  auto point = [&](int i) { return kPoleMargin + (1.0 - 2.0 * kPoleMargin) * i / (grid - 1); };
  if (exec == Exec::parallel) {
#pragma omp parallel for reduction(min : min_scal) reduction(max : max_rd) schedule(static)
    for (int i = 0; i < grid; ++i) {
      const double s = point(i);
      min_scal = std::min(min_scal, scalar_curvature_profile(profile, s));
      max_rd = std::max(max_rd, std::abs(profile.rho_dot(s)));
    }
  } else {
    for (int i = 0; i < grid; ++i) {
      const double s = point(i);
      min_scal = std::min(min_scal, scalar_curvature_profile(profile, s));
      max_rd = std::max(max_rd, std::abs(profile.rho_dot(s)));
    }
  }
  Lemma3Report r;
  r.min_scal = min_scal;
  r.max_abs_rho_dot = max_rd;
  r.grid = grid;
  r.implication_holds = !(max_rd > 1.0 + 1e-8) || min_scal < 0.0;
  return r;
}

Lemma4Report check_lemma4(const Profile& profile, int grid, Exec exec) {
  if (grid < 2)
    throw InputError("envelope check needs a grid of at least 2 intervals");
  const int n = profile.n();
  double excess = -std::numeric_limits<double>::infinity();
  if (exec == Exec::parallel) {
#pragma omp parallel for reduction(max : excess) schedule(static)
    for (int i = 0; i <= grid; ++i) {
      const double s = static_cast<double>(i) / grid;
      excess = std::max(excess, profile.phi(s) - phi_max(n, s));
    }
  } else {
    for (int i = 0; i <= grid; ++i) {
      const double s = static_cast<double>(i) / grid;
      excess = std::max(excess, profile.phi(s) - phi_max(n, s));
    }
  }
  return {excess, grid};
}

} // namespace specbound::cohom1
