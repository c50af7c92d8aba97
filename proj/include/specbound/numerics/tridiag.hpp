#ifndef SPECBOUND_NUMERICS_TRIDIAG_HPP
#define SPECBOUND_NUMERICS_TRIDIAG_HPP

#include <vector>

#include "specbound/exec.hpp"

namespace specbound::numerics {

/// Symmetric tridiagonal operator.
struct TridiagEig {
  std::vector<double> diag;
  std::vector<double> offdiag; ///< size diag.size() - 1
};

/// Number of eigenvalues strictly below x (Sturm sequence via the LDL^T
/// pivot signs).
int sturm_count(const TridiagEig& t, double x);

/// Eigenvalues with indices [first, first + count) in ascending order, each
/// isolated independently by bisection on the Sturm count. The parallel
/// path distributes indices across OpenMP threads.
std::vector<double> tridiag_eigs(const TridiagEig& t, int first, int count,
                                 Exec exec = Exec::parallel);

} // namespace specbound::numerics

#endif // SPECBOUND_NUMERICS_TRIDIAG_HPP
