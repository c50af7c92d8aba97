#ifndef SPECBOUND_TORIC_POTENTIAL_HPP
#define SPECBOUND_TORIC_POTENTIAL_HPP

#include <array>

#include "specbound/exec.hpp"
#include "specbound/numerics/polynomial2.hpp"
#include "specbound/numerics/quadrature.hpp"
#include "specbound/toric/polytope.hpp"

namespace specbound::toric {

/// Symmetric dim x dim matrix (dim <= 2), row-major in a fixed 2x2 block.
struct LocalMatrix {
  int dim = 1;
  std::array<double, 4> a{0.0, 0.0, 0.0, 0.0};
  double operator()(int i, int j) const { return a[2 * i + j]; }
  double& operator()(int i, int j) { return a[2 * i + j]; }
};

/// u = 1/2 sum_i l_i log l_i + perturbation, the Guillemin potential of P
/// plus a polynomial that is smooth up to the boundary.
class SymplecticPotential {
public:
  explicit SymplecticPotential(Polytope polytope, numerics::Polynomial2 perturbation = {});

  const Polytope& polytope() const { return polytope_; }
  const numerics::Polynomial2& perturbation() const { return perturbation_; }

  /// Euclidean Hessian u_ij. Requires l_i(x) > 1e-12 for every facet.
  LocalMatrix hessian(const Point2& x) const;

  /// Scal = -sum_ij d^2 u^ij / dx_i dx_j from closed-form third and fourth
  /// derivatives of u (no differencing).
  LocalMatrix perturbation_hessian(const Point2& x) const;
  double scalar_curvature_exact(const Point2& x) const;

  /// Throws InvalidGeometry unless the Hessian is positive definite on a
  /// deterministic interior lattice of about 10^3 points.
  void validate() const;

private:
  void require_interior(const Point2& x) const;

  Polytope polytope_;
  numerics::Polynomial2 perturbation_;
  // Cached partial derivatives of the perturbation, index [dx][dy].
  std::array<std::array<numerics::Polynomial2, 5>, 5> dpert_;
};

/// Inverse Hessian u^ij at an interior point. Throws InputError outside
/// the interior and InvalidGeometry if the Hessian is not positive definite.
LocalMatrix potential_inverse_hessian(const SymplecticPotential& u, const Point2& x);

/// Abreu scalar curvature by central second differences of the inverse
/// Hessian field, Richardson-extrapolated from steps h and h/2. Requires a
/// clearance of at least 2h to every facet. h <= 0 selects the default
/// step 1e-3 * inradius.
double scalar_curvature_toric(const SymplecticPotential& u, const Point2& x, double h = 0.0);

struct CurvatureSample {
  double min = 0.0;
  double max = 0.0;
  int points = 0;
};

/// Closed-form curvature sampled on an interior lattice: npts uniform
/// points in 1D, an npts-per-side grid clipped to the interior in 2D.
CurvatureSample sample_scalar_curvature(const SymplecticPotential& u, int npts,
                                        Exec exec = Exec::parallel);

/// Terms of the integration-by-parts identity
///   int_P u^ij F_ij dmu = 2 int_dP F dsigma - int_P Scal F dmu.
struct IbpResult {
  double hessian_term = 0.0;   ///< int_P u^ij F_ij dmu
  double boundary_term = 0.0;  ///< 2 int_dP F dsigma
  double curvature_term = 0.0; ///< int_P Scal F dmu
  double residual = 0.0;       ///< hessian - boundary + curvature
  int points = 0;              ///< accepted interior rule size
};

IbpResult ibp_residual(const SymplecticPotential& u, const numerics::Polynomial2& F,
                       const numerics::QuadratureSetting& quad = {});

} // namespace specbound::toric

#endif // SPECBOUND_TORIC_POTENTIAL_HPP
