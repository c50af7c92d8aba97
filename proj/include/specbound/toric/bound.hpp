#ifndef SPECBOUND_TORIC_BOUND_HPP
#define SPECBOUND_TORIC_BOUND_HPP

#include <vector>

#include "specbound/exec.hpp"
#include "specbound/numerics/legendre_basis.hpp"
#include "specbound/numerics/polynomial.hpp"
#include "specbound/numerics/sym_matrix.hpp"
#include "specbound/toric/polytope.hpp"

namespace specbound::toric {

/// Quadratic forms of the bound functional on V_k = polynomials of degree
/// <= k in t = <w, x>:
///   A_ij = 2 int_dP rho_ij(t) dsigma, rho_ij'' = b_i' b_j', rho_ij(t*) = rho_ij'(t*) = 0,
///   M_ij = int_P b_i(t) b_j(t) dmu,
/// with t* the midpoint of the support interval [t_min, t_max].
///
/// The Legendre basis is P_j(tau) in the local variable
/// tau = (t - t*) / half_width; since rho scales with the same factor as
/// (d/dt)^2, rho_ij is the centred double antiderivative of P_i' P_j' in tau.
/// The monomial basis uses t^j directly and is kept as a cross-check.
struct BoundPencil {
  numerics::SymMatrix A;
  numerics::SymMatrix M;
  Point2 direction{1.0, 0.0};
  double t_min = 0.0;
  double t_max = 0.0;
  numerics::TrialBasis basis = numerics::TrialBasis::legendre;
  std::vector<numerics::Polynomial> basis_polys; ///< in (t - t*) / half_width (legendre) or t - t* (monomial)

  double t_center() const { return 0.5 * (t_min + t_max); }
  double half_width() const { return 0.5 * (t_max - t_min); }
};

BoundPencil assemble_bound_matrices(const Polytope& P, Point2 direction, int k,
                                    numerics::TrialBasis basis = numerics::TrialBasis::legendre);

struct ToricBoundResult {
  int k = 0;
  Point2 direction{1.0, 0.0};
  double value = 0.0;             ///< C_k, top eigenvalue of (A, M)
  numerics::Polynomial maximizer; ///< in t = <w, x>, normalised by int_P phi^2 = 1
  bool formal = false;            ///< polygon is not Delzant
  BoundPencil pencil;
};

/// C_k for the polytope and projection direction (default e1).
ToricBoundResult compute_Ck(const Polytope& P, int k, Point2 direction = {1.0, 0.0},
                            numerics::TrialBasis basis = numerics::TrialBasis::legendre);

struct SweepResult {
  Point2 direction{1.0, 0.0};
  double angle = 0.0;              ///< radians in [0, pi)
  double value = 0.0;              ///< smallest C_k found
  std::vector<double> sample_values; ///< C_k at angle pi * i / nsamples
};

/// Minimum of C_k over projection directions: uniform samples on the half
/// circle, then golden-section refinement around the best sample down to an
/// angular bracket of 1e-6. Samples are evaluated concurrently on the
/// parallel path.
SweepResult direction_sweep(const Polytope& P, int k, int nsamples, Exec exec = Exec::parallel);

} // namespace specbound::toric

#endif // SPECBOUND_TORIC_BOUND_HPP
