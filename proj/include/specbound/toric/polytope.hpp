#ifndef SPECBOUND_TORIC_POLYTOPE_HPP
#define SPECBOUND_TORIC_POLYTOPE_HPP

#include <array>
#include <functional>
#include <utility>
#include <vector>

#include "specbound/numerics/quadrature.hpp"

namespace specbound::toric {

using numerics::Point2;

/// Affine facet function l(x) = <normal, x> + offset, positive on the
/// interior. The normal is a primitive integer vector (1D uses normal[0]).
struct Facet {
  std::array<long, 2> normal{0, 0};
  double offset = 0.0;
};

/// Convex lattice polytope of dimension 1 or 2.
///
/// In 2D facet i is the edge from vertex i to vertex i+1 (counterclockwise);
/// in 1D vertices are {x_min, x_max} stored as (x, 0) and facets are
/// x - x_min and x_max - x.
class Polytope {
public:
  int dim() const { return dim_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<Point2>& vertices() const { return vertices_; }
  /// Every vertex has incident primitive normals forming a lattice basis.
  bool delzant() const { return delzant_; }

  double facet_value(std::size_t i, const Point2& x) const;
  /// Euclidean length |nu_i|_2 of the primitive normal.
  double normal_length(std::size_t i) const;
  /// min_i l_i(x) / |nu_i|, the Euclidean distance to the nearest facet
  /// hyperplane (negative outside).
  double clearance(const Point2& x) const;

  /// Vertex average; interior for a convex polytope.
  Point2 center() const;
  /// Clearance of center(), used as the length scale of the polytope.
  double inradius_estimate() const;

  /// [min, max] of <w, x> over the polytope.
  std::pair<double, double> support(const Point2& w) const;

  Polytope translated(const Point2& shift) const;
  Polytope dilated(double factor) const;

private:
  friend Polytope polytope_from_vertices(int dim, const std::vector<Point2>& vertices);

  int dim_ = 0;
  std::vector<Facet> facets_;
  std::vector<Point2> vertices_;
  bool delzant_ = true;
};

/// Builds the facet description from an ordered vertex list.
///
/// dim 1: two distinct reals (either order). dim 2: at least three vertices
/// in strictly convex counterclockwise position. Edge normals are
/// rationalised by continued fractions with denominators up to 1e6; an edge
/// that admits no such normal is rejected as "not a lattice polytope".
Polytope polytope_from_vertices(int dim, const std::vector<Point2>& vertices);

inline Polytope interval(double a, double b) { return polytope_from_vertices(1, {{a, 0.0}, {b, 0.0}}); }

/// Per-facet density of the boundary measure sigma relative to Euclidean
/// facet measure, 1 / |nu_i|_2. In 1D both entries are the unit endpoint
/// masses.
std::vector<double> boundary_measure(const Polytope& P);

/// Integral of F over the boundary against sigma. 1D: F(x_min) + F(x_max).
/// 2D: per-edge escalating Gauss-Legendre weighted by 1 / |nu|.
double boundary_integrate(const Polytope& P, const std::function<double(const Point2&)>& F,
                          const numerics::QuadratureSetting& quad = {});

/// Same integral with a fixed per-edge rule of `npts` points (exact when F
/// restricted to each edge is a polynomial of degree <= 2 npts - 1).
double boundary_integrate_fixed(const Polytope& P,
                                const std::function<double(const Point2&)>& F, int npts);

/// Interior integral with a fixed rule: 1D Gauss-Legendre with `npts`
/// points; 2D centroid-fan triangulation with an npts x npts collapsed rule
/// per triangle (exact for total degree <= 2 npts - 2).
double interior_integrate_fixed(const Polytope& P,
                                const std::function<double(const Point2&)>& F, int npts);

/// Vector-valued interior integral with the point count doubled until all
/// components agree to quad.rel_tol.
std::vector<double> interior_integrate_escalating(
    const Polytope& P, const std::function<void(const Point2&, std::span<double>)>& F,
    std::size_t components, const numerics::QuadratureSetting& quad = {},
    int* points_used = nullptr);

} // namespace specbound::toric

#endif // SPECBOUND_TORIC_POLYTOPE_HPP
