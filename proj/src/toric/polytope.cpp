#include "specbound/toric/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "specbound/errors.hpp"

namespace specbound::toric {

using numerics::GaussRule;
using numerics::gauss_legendre;

namespace {

constexpr long kMaxDenominator = 1000000;

// Continued-fraction convergents of r until |r - p/q| <= tol.
bool rationalize(double r, long& p, long& q) {
  constexpr double tol = 1e-12;
  long h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  double x = r;
  for (int iter = 0; iter < 64; ++iter) {
    const double a = std::floor(x);
    if (std::abs(a) > 1e12)
      return false;
    const long ai = static_cast<long>(a);
    const long h = ai * h1 + h2;
    const long k = ai * k1 + k2;
    if (k > kMaxDenominator)
      return false;
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
    if (std::abs(r - static_cast<double>(h) / static_cast<double>(k)) <= tol) {
      p = h;
      q = k;
      return true;
    }
    const double frac = x - a;
    if (frac <= 0.0)
      return false;
    x = 1.0 / frac;
  }
  return false;
}

// Primitive integer vector parallel to (nx, ny) with the same orientation.
std::array<long, 2> primitive_normal(double nx, double ny) {
  const bool x_major = std::abs(nx) >= std::abs(ny);
  const double big = x_major ? nx : ny;
  const double small = x_major ? ny : nx;
  long p = 0, q = 1;
  if (!rationalize(small / big, p, q))
    throw InputError("not a lattice polytope: edge normal has no integer representative "
                     "with denominator <= 1e6");
  const long sign = big > 0 ? 1 : -1;
  std::array<long, 2> nu = x_major ? std::array<long, 2>{sign * q, sign * p}
                                   : std::array<long, 2>{sign * p, sign * q};
  const long g = std::gcd(std::abs(nu[0]), std::abs(nu[1]));
  nu[0] /= g;
  nu[1] /= g;
  return nu;
}

} // namespace

double Polytope::facet_value(std::size_t i, const Point2& x) const {
  const Facet& f = facets_[i];
  return static_cast<double>(f.normal[0]) * x[0] + static_cast<double>(f.normal[1]) * x[1] +
         f.offset;
}

double Polytope::normal_length(std::size_t i) const {
  const Facet& f = facets_[i];
  return std::hypot(static_cast<double>(f.normal[0]), static_cast<double>(f.normal[1]));
}

double Polytope::clearance(const Point2& x) const {
  double c = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < facets_.size(); ++i)
    c = std::min(c, facet_value(i, x) / normal_length(i));
  return c;
}

Point2 Polytope::center() const {
  Point2 c{0.0, 0.0};
  for (const auto& v : vertices_) {
    c[0] += v[0];
    c[1] += v[1];
  }
  c[0] /= static_cast<double>(vertices_.size());
  c[1] /= static_cast<double>(vertices_.size());
  return c;
}

double Polytope::inradius_estimate() const { return clearance(center()); }

std::pair<double, double> Polytope::support(const Point2& w) const {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& v : vertices_) {
    const double t = w[0] * v[0] + (dim_ == 2 ? w[1] * v[1] : 0.0);
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  return {lo, hi};
}

Polytope Polytope::translated(const Point2& shift) const {
  std::vector<Point2> v = vertices_;
  for (auto& p : v) {
    p[0] += shift[0];
    if (dim_ == 2)
      p[1] += shift[1];
  }
  return polytope_from_vertices(dim_, v);
}

Polytope Polytope::dilated(double factor) const {
  if (!(factor > 0.0))
    throw InputError("dilation factor must be positive");
  std::vector<Point2> v = vertices_;
  for (auto& p : v) {
    p[0] *= factor;
    p[1] *= factor;
  }
  return polytope_from_vertices(dim_, v);
}

Polytope polytope_from_vertices(int dim, const std::vector<Point2>& vertices) {
  Polytope P;
  P.dim_ = dim;
  if (dim == 1) {
    if (vertices.size() != 2)
      throw InputError("1D polytope needs exactly two vertices");
    const double a = std::min(vertices[0][0], vertices[1][0]);
    const double b = std::max(vertices[0][0], vertices[1][0]);
    if (!(b > a))
      throw InputError("1D polytope endpoints must be distinct");
    P.vertices_ = {{a, 0.0}, {b, 0.0}};
    P.facets_ = {Facet{{1, 0}, -a}, Facet{{-1, 0}, b}};
    P.delzant_ = true;
    return P;
  }
  if (dim != 2)
    throw InputError("polytope dimension must be 1 or 2");
  const std::size_t n = vertices.size();
  if (n < 3)
    throw InputError("2D polytope needs at least three vertices");
  double scale = 0.0;
  for (const auto& v : vertices)
    scale = std::max({scale, std::abs(v[0]), std::abs(v[1])});
  scale = std::max(scale, 1.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(vertices[i][0] - vertices[j][0]) <= 1e-12 * scale &&
          std::abs(vertices[i][1] - vertices[j][1]) <= 1e-12 * scale)
        throw InputError("repeated vertex in polytope");
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = vertices[i];
    const Point2& b = vertices[(i + 1) % n];
    const Point2& c = vertices[(i + 2) % n];
    const double cross = (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0]);
    if (!(cross > 1e-12 * scale * scale))
      throw InputError("vertices are not in strictly convex counterclockwise position");
  }
  P.vertices_ = vertices;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = vertices[i];
    const Point2& b = vertices[(i + 1) % n];
    // Interior lies to the left of a counterclockwise edge.
    const auto nu = primitive_normal(-(b[1] - a[1]), b[0] - a[0]);
    Facet f{nu, -(static_cast<double>(nu[0]) * a[0] + static_cast<double>(nu[1]) * a[1])};
    P.facets_.push_back(f);
  }
  // Each vertex lies on exactly its two incident facets.
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t i = 0; i < n; ++i) {
      const double tol = 1e-12 * scale * P.normal_length(i);
      const double val = P.facet_value(i, vertices[v]);
      const bool incident = (i == v) || ((i + 1) % n == v);
      if (incident && std::abs(val) > tol)
        throw InputError("not a lattice polytope: rationalised normal misses vertex " +
                         std::to_string(v));
      if (!incident && !(val > tol))
        throw InputError("polytope is not convex: vertex " + std::to_string(v) +
                         " violates facet " + std::to_string(i));
    }
  P.delzant_ = true;
  for (std::size_t v = 0; v < n; ++v) {
    const auto& n1 = P.facets_[(v + n - 1) % n].normal;
    const auto& n2 = P.facets_[v].normal;
    const long det = n1[0] * n2[1] - n1[1] * n2[0];
    if (std::abs(det) != 1)
      P.delzant_ = false;
  }
  return P;
}

std::vector<double> boundary_measure(const Polytope& P) {
  std::vector<double> d;
  for (std::size_t i = 0; i < P.facets().size(); ++i)
    d.push_back(1.0 / P.normal_length(i));
  return d;
}

namespace {

// Edge i of a 2D polytope: from vertex i to vertex i+1.
std::pair<Point2, Point2> edge(const Polytope& P, std::size_t i) {
  const auto& v = P.vertices();
  return {v[i], v[(i + 1) % v.size()]};
}

} // namespace

double boundary_integrate(const Polytope& P, const std::function<double(const Point2&)>& F,
                          const numerics::QuadratureSetting& quad) {
  const auto& v = P.vertices();
  if (P.dim() == 1)
    return F(v[0]) + F(v[1]);
  double acc = 0.0;
  for (std::size_t i = 0; i < P.facets().size(); ++i) {
    const auto [a, b] = edge(P, i);
    const double len = std::hypot(b[0] - a[0], b[1] - a[1]);
    const auto r = numerics::integrate_escalating(
        [&](double s) { return F({a[0] + s * (b[0] - a[0]), a[1] + s * (b[1] - a[1])}); }, 0.0,
        1.0, quad);
    acc += r.value * len / P.normal_length(i);
  }
  return acc;
}

double boundary_integrate_fixed(const Polytope& P,
                                const std::function<double(const Point2&)>& F, int npts) {
  const auto& v = P.vertices();
  if (P.dim() == 1)
    return F(v[0]) + F(v[1]);
  const GaussRule rule = gauss_legendre(npts);
  double acc = 0.0;
  for (std::size_t i = 0; i < P.facets().size(); ++i) {
    const auto [a, b] = edge(P, i);
    const double len = std::hypot(b[0] - a[0], b[1] - a[1]);
    const double I = numerics::integrate_fixed(
        [&](double s) { return F({a[0] + s * (b[0] - a[0]), a[1] + s * (b[1] - a[1])}); }, 0.0,
        1.0, rule);
    acc += I * len / P.normal_length(i);
  }
  return acc;
}

double interior_integrate_fixed(const Polytope& P,
                                const std::function<double(const Point2&)>& F, int npts) {
  const GaussRule rule = gauss_legendre(npts);
  const auto& v = P.vertices();
  if (P.dim() == 1)
    return numerics::integrate_fixed([&](double x) { return F({x, 0.0}); }, v[0][0], v[1][0],
                                     rule);
  const Point2 c = P.center();
  double acc = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    acc += numerics::integrate_triangle([&](double x, double y) { return F({x, y}); }, c, v[i],
                                        v[(i + 1) % v.size()], rule);
  return acc;
}

std::vector<double> interior_integrate_escalating(
    const Polytope& P, const std::function<void(const Point2&, std::span<double>)>& F,
    std::size_t components, const numerics::QuadratureSetting& quad, int* points_used) {
  const auto& v = P.vertices();
  if (P.dim() == 1)
    return numerics::integrate_escalating_vec(
        [&](double x, std::span<double> out) { F({x, 0.0}, out); }, components, v[0][0],
        v[1][0], quad, points_used);

  const Point2 c = P.center();
  std::vector<double> buf(components);
  auto estimate = [&](int n, std::vector<double>& value, std::vector<double>& mass) {
    const GaussRule rule = gauss_legendre(n);
    value.assign(components, 0.0);
    mass.assign(components, 0.0);
    for (std::size_t t = 0; t < v.size(); ++t) {
      const Point2& a = c;
      const Point2& b = v[t];
      const Point2& d = v[(t + 1) % v.size()];
      const double e1x = b[0] - a[0], e1y = b[1] - a[1];
      const double e2x = d[0] - b[0], e2y = d[1] - b[1];
      const double det = std::abs(e1x * e2y - e1y * e2x);
      for (int i = 0; i < n; ++i) {
        const double u = 0.5 * (rule.nodes[i] + 1.0);
        for (int j = 0; j < n; ++j) {
          const double s = 0.5 * (rule.nodes[j] + 1.0);
          const double w = 0.25 * rule.weights[i] * rule.weights[j] * u * det;
          F({a[0] + u * (e1x + s * e2x), a[1] + u * (e1y + s * e2y)}, buf);
          for (std::size_t k = 0; k < components; ++k) {
            value[k] += w * buf[k];
            mass[k] += w * std::abs(buf[k]);
          }
        }
      }
    }
  };
  int n = quad.start_points;
  std::vector<double> prev, prev_mass;
  estimate(n, prev, prev_mass);
  while (true) {
    const int next = 2 * n;
    if (next > quad.max_points)
      throw NumericalError("polygon quadrature did not converge within " +
                           std::to_string(quad.max_points) + " points per direction");
    std::vector<double> cur, mass;
    estimate(next, cur, mass);
    bool ok = true;
    for (std::size_t k = 0; k < components && ok; ++k)
      ok = std::abs(cur[k] - prev[k]) <= quad.rel_tol * mass[k];
    n = next;
    if (ok) {
      if (points_used)
        *points_used = n;
      return cur;
    }
    prev = std::move(cur);
  }
}

} // namespace specbound::toric
