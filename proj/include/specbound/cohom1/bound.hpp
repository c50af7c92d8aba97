#ifndef SPECBOUND_COHOM1_BOUND_HPP
#define SPECBOUND_COHOM1_BOUND_HPP

#include "specbound/numerics/polynomial.hpp"
#include "specbound/numerics/quadrature.hpp"
#include "specbound/numerics/sym_matrix.hpp"

namespace specbound::cohom1 {

struct Cohom1BoundResult {
  int n = 0;
  int k = 0;
  double value = 0.0;             ///< D_k
  numerics::Polynomial maximizer; ///< in s, normalised by int_0^1 phi^2 ds = 1
  numerics::SymMatrix A;          ///< int phi_max^{2n-2} b_i' b_j' ds
  numerics::SymMatrix M;          ///< int b_i b_j ds
  int quadrature_points = 0;      ///< accepted per-half rule size
};

/// D_k: the top eigenvalue of the pencil built from polynomials of degree
/// <= k in s with the envelope weight phi_max^{2n-2}. Depends only on
/// (n, k). Throws InputError for n < 2 or k < 0.
Cohom1BoundResult compute_Dk(int n, int k, const numerics::QuadratureSetting& quad = {});

} // namespace specbound::cohom1

#endif // SPECBOUND_COHOM1_BOUND_HPP
