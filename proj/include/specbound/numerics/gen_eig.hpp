#ifndef SPECBOUND_NUMERICS_GEN_EIG_HPP
#define SPECBOUND_NUMERICS_GEN_EIG_HPP

#include <vector>

#include "specbound/numerics/sym_matrix.hpp"

namespace specbound::numerics {

struct GenEigOptions {
  /// Jacobi sweeps stop once the off-diagonal Frobenius norm drops below
  /// tol * ||C||_F.
  double tol = 1e-13;
  int max_sweeps = 100;
};

/// Eigenpairs of the symmetric-definite pencil A v = lambda M v.
struct GenEigDecomposition {
  std::vector<double> values;               ///< ascending
  std::vector<std::vector<double>> vectors; ///< vectors[i] pairs with values[i], M-normalized
  int sweeps = 0;
};

/// Cholesky reduction M = L L^T, then cyclic Jacobi on L^-1 A L^-T.
///
/// Throws InputError on order mismatch and NumericalError when M is not
/// positive definite (the Rayleigh ratio denominator is degenerate).
GenEigDecomposition sym_gen_eig_decompose(const SymMatrix& A, const SymMatrix& M,
                                          const GenEigOptions& opts = {});

/// Eigenvalues only, ascending. The largest is sup (v^T A v) / (v^T M v).
std::vector<double> sym_gen_eigs(const SymMatrix& A, const SymMatrix& M,
                                 const GenEigOptions& opts = {});

} // namespace specbound::numerics

#endif // SPECBOUND_NUMERICS_GEN_EIG_HPP
