#ifndef SPECBOUND_NUMERICS_STURM_LIOUVILLE_HPP
#define SPECBOUND_NUMERICS_STURM_LIOUVILLE_HPP

#include <functional>
#include <vector>

#include "specbound/exec.hpp"
#include "specbound/numerics/tridiag.hpp"

namespace specbound::numerics {

enum class RightBoundary { natural, dirichlet };

/// Vertex-centred conservative discretisation of -(p u')' = lambda u on
/// [0, length] with `mesh` cells. Fluxes use p at cell midpoints, so a
/// coefficient vanishing at the endpoints is never sampled there. The left
/// face is always zero-flux; the right face is zero-flux or Dirichlet.
/// Returned in symmetric form V^-1/2 K V^-1/2 with lumped nodal volumes V.
TridiagEig assemble_sturm_liouville(const std::function<double(double)>& p, double length,
                                    int mesh, RightBoundary right = RightBoundary::natural,
                                    Exec exec = Exec::parallel);

/// Eigenvalues below this fraction of the first clearly nonzero eigenvalue
/// are reported as the exact zero mode.
inline constexpr double kZeroModeThreshold = 1e-9;

/// First `count` eigenvalues of -(p u')' = lambda u with natural boundary
/// conditions, ascending, zero mode (constants) at index 0.
///
/// Throws InputError for mesh < 16, count < 1, length <= 0, or a negative
/// coefficient sample.
std::vector<double> sl_eigs(const std::function<double(double)>& p, double length, int mesh,
                            int count, RightBoundary right = RightBoundary::natural,
                            Exec exec = Exec::parallel);

/// Invariant-spectrum output: lambda_0 = 0 followed by the first nonzero
/// eigenvalues, with the mesh study used to qualify them.
struct SpectrumResult {
  std::vector<double> eigenvalues; ///< index 0 is the zero mode
  int mesh = 0;
  int coarse_mesh = 0;             ///< mesh / 2, the comparison solve
  double relative_change = 0.0;    ///< max_k |lambda_k(mesh) - lambda_k(mesh/2)| / lambda_k(mesh), k >= 1
};

struct SpectrumOptions {
  int mesh = 4000;
  bool refine = false;          ///< double the mesh until relative_change < refine_tol
  double refine_tol = 1e-4;
  int max_mesh = 256000;
};

/// Runs sl_eigs at mesh and mesh/2 (refining if requested) and packages
/// `count` nonzero eigenvalues after the zero mode.
SpectrumResult sl_spectrum(const std::function<double(double)>& p, double length, int count,
                           const SpectrumOptions& opts = {}, Exec exec = Exec::parallel);

} // namespace specbound::numerics

#endif // SPECBOUND_NUMERICS_STURM_LIOUVILLE_HPP
