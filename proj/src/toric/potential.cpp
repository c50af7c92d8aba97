#include "specbound/toric/potential.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "specbound/errors.hpp"

namespace specbound::toric {

using numerics::Polynomial2;

namespace {

using M2 = std::array<double, 4>;

M2 mul(const M2& x, const M2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
          x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

M2 add(const M2& x, const M2& y) { return {x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]}; }

// Inverse of a symmetric matrix stored in a 2x2 block; dim 1 uses a[0] only.
bool invert_pd(int dim, const M2& h, M2& inv) {
  if (dim == 1) {
    if (!(h[0] > 0.0))
      return false;
    inv = {1.0 / h[0], 0.0, 0.0, 0.0};
    return true;
  }
  const double det = h[0] * h[3] - h[1] * h[2];
  if (!(h[0] > 0.0) || !(det > 0.0))
    return false;
  inv = {h[3] / det, -h[1] / det, -h[2] / det, h[0] / det};
  return true;
}

} // namespace

SymplecticPotential::SymplecticPotential(Polytope polytope, Polynomial2 perturbation)
    : polytope_(std::move(polytope)), perturbation_(std::move(perturbation)) {
  if (polytope_.dim() == 1 && perturbation_.depends_on_y())
    throw InputError("perturbation of a 1D potential may not involve y");
  for (int dx = 0; dx <= 4; ++dx)
    for (int dy = 0; dx + dy <= 4; ++dy)
      dpert_[dx][dy] = perturbation_.partial(dx, dy);
}

void SymplecticPotential::require_interior(const Point2& x) const {
  for (std::size_t i = 0; i < polytope_.facets().size(); ++i)
    if (!(polytope_.facet_value(i, x) > 1e-12))
      throw InputError("point is not strictly inside the polytope");
}

LocalMatrix SymplecticPotential::hessian(const Point2& x) const {
  require_interior(x);
  const int d = polytope_.dim();
  LocalMatrix H;
  H.dim = d;
  for (std::size_t f = 0; f < polytope_.facets().size(); ++f) {
    const auto& nu = polytope_.facets()[f].normal;
    const double l = polytope_.facet_value(f, x);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        H(a, b) += 0.5 * static_cast<double>(nu[a] * nu[b]) / l;
  }
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const int dx = (a == 0) + (b == 0);
      H(a, b) += dpert_[dx][2 - dx](x[0], x[1]);
    }
  if (d == 1)
    H(0, 1) = H(1, 0) = H(1, 1) = 0.0;
  return H;
}

LocalMatrix SymplecticPotential::perturbation_hessian(const Point2& x) const {
  require_interior(x);
  const int d = polytope_.dim();
  LocalMatrix Q;
  Q.dim = d;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const int dx = (a == 0) + (b == 0);
      Q(a, b) = dpert_[dx][2 - dx](x[0], x[1]);
    }
  return Q;
}

namespace {

// Local data of the inverse Hessian G = H^{-1} at one point, organised so
// that nothing of size 1/l is formed and then cancelled.
//
// With H = sum_f nu_f nu_f^T / (2 l_f) + Q, the determinant expands
// (Cauchy-Binet) as a sum of terms coef / prod_{t in T} l_t over facet sets
// T of size <= dim. det(H) times a product of l_s is summed term by term with
// the common factors removed symbolically. a_f = G nu_f / l_f stays bounded
// up to the boundary and carries all the singular behaviour.
struct DetTerm {
  int f1 = -1;
  int f2 = -1;
  double coef = 0.0;
};

struct Frame {
  int dim = 1;
  std::size_t m = 0;
  std::vector<std::array<double, 2>> nu;
  std::vector<double> l;
  M2 Q{};
  M2 adjQ{};
  std::vector<DetTerm> terms;
  double det = 0.0;
  M2 G{};
  std::vector<std::array<double, 2>> a;

  // det(H) * prod_{s in {s1, s2}} l_s over terms that avoid facet `skip`.
  double scaled_det(int s1, int s2 = -1, int skip = -1) const {
    double acc = 0.0;
    for (const auto& t : terms) {
      if (skip >= 0 && (t.f1 == skip || t.f2 == skip))
        continue;
      double v = t.coef;
      for (int s : {s1, s2})
        if (s >= 0 && s != t.f1 && s != t.f2)
          v *= l[s];
      for (int f : {t.f1, t.f2})
        if (f >= 0 && f != s1 && f != s2)
          v /= l[f];
      acc += v;
    }
    return acc;
  }
};

double cross(const std::array<double, 2>& u, const std::array<double, 2>& v) {
  return u[0] * v[1] - u[1] * v[0];
}

Frame make_frame(const Polytope& P, const M2& Q, const Point2& x) {
  Frame fr;
  fr.dim = P.dim();
  fr.m = P.facets().size();
  fr.Q = Q;
  for (std::size_t f = 0; f < fr.m; ++f) {
    const auto& n = P.facets()[f].normal;
    fr.nu.push_back({static_cast<double>(n[0]), static_cast<double>(n[1])});
    fr.l.push_back(P.facet_value(f, x));
  }
  const int m = static_cast<int>(fr.m);
  if (fr.dim == 1) {
    fr.adjQ = {1.0, 0.0, 0.0, 0.0};
    for (int f = 0; f < m; ++f)
      fr.terms.push_back({f, -1, 0.5 * fr.nu[f][0] * fr.nu[f][0]});
    fr.terms.push_back({-1, -1, Q[0]});
  } else {
    fr.adjQ = {Q[3], -Q[1], -Q[2], Q[0]};
    for (int f = 0; f < m; ++f)
      for (int g = f + 1; g < m; ++g) {
        const double c = cross(fr.nu[f], fr.nu[g]);
        if (c != 0.0)
          fr.terms.push_back({f, g, 0.25 * c * c});
      }
    for (int f = 0; f < m; ++f) {
      const auto& n = fr.nu[f];
      const double q = n[0] * (fr.adjQ[0] * n[0] + fr.adjQ[1] * n[1]) +
                       n[1] * (fr.adjQ[2] * n[0] + fr.adjQ[3] * n[1]);
      fr.terms.push_back({f, -1, 0.5 * q});
    }
    fr.terms.push_back({-1, -1, Q[0] * Q[3] - Q[1] * Q[2]});
  }
  fr.det = fr.scaled_det(-1);
  if (!(fr.det > 0.0))
    throw InvalidGeometry("Hessian of the symplectic potential is not positive definite");

  // adj(H) and adj(H) nu_g with the vanishing g-th term left out.
  M2 adj = fr.adjQ;
  if (fr.dim == 2)
    for (int f = 0; f < m; ++f) {
      const double p0 = -fr.nu[f][1], p1 = fr.nu[f][0];
      const double w = 0.5 / fr.l[f];
      adj[0] += w * p0 * p0;
      adj[1] += w * p0 * p1;
      adj[2] += w * p0 * p1;
      adj[3] += w * p1 * p1;
    }
  if (fr.dim == 2 && !(adj[0] > 0.0))
    throw InvalidGeometry("Hessian of the symplectic potential is not positive definite");
  for (int k = 0; k < 4; ++k)
    fr.G[k] = adj[k] / fr.det;
  for (int g = 0; g < m; ++g) {
    std::array<double, 2> v{fr.nu[g][0], 0.0};
    if (fr.dim == 2) {
      v = {fr.adjQ[0] * fr.nu[g][0] + fr.adjQ[1] * fr.nu[g][1],
           fr.adjQ[2] * fr.nu[g][0] + fr.adjQ[3] * fr.nu[g][1]};
      for (int f = 0; f < m; ++f) {
        if (f == g)
          continue;
        const double w = cross(fr.nu[f], fr.nu[g]) * 0.5 / fr.l[f];
        v[0] += -fr.nu[f][1] * w;
        v[1] += fr.nu[f][0] * w;
      }
    }
    const double dg = fr.scaled_det(g);
    fr.a.push_back({v[0] / dg, v[1] / dg});
  }
  return fr;
}

double dot(const std::array<double, 2>& u, const std::array<double, 2>& v) {
  return u[0] * v[0] + u[1] * v[1];
}

std::array<double, 2> mat_vec(const M2& A, const std::array<double, 2>& v) {
  return {A[0] * v[0] + A[1] * v[1], A[2] * v[0] + A[3] * v[1]};
}

} // namespace

double SymplecticPotential::scalar_curvature_exact(const Point2& x) const {
  require_interior(x);
  const int d = polytope_.dim();
  // Perturbation Hessian Q and its first and second derivatives.
  M2 Q{};
  std::array<M2, 2> dQ{};
  std::array<std::array<M2, 2>, 2> ddQ{};
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const int ab = (a == 0) + (b == 0);
      Q[2 * a + b] = dpert_[ab][2 - ab](x[0], x[1]);
      for (int c = 0; c < d; ++c) {
        const int abc = ab + (c == 0);
        dQ[c][2 * a + b] = dpert_[abc][3 - abc](x[0], x[1]);
        for (int e = 0; e < d; ++e) {
          const int abce = abc + (e == 0);
          ddQ[c][e][2 * a + b] = dpert_[abce][4 - abce](x[0], x[1]);
        }
      }
    }
  const Frame fr = make_frame(polytope_, Q, x);
  const int m = static_cast<int>(fr.m);
  const M2& G = fr.G;

  // kappa_h = (p_hh / 2 - 1) / l_h and pi_gh = (a_g . nu_h) / l_h, both bounded.
  std::vector<double> kappa(m), phh(m);
  std::vector<double> pi(m * m, 0.0);
  for (int h = 0; h < m; ++h) {
    const double dh = fr.scaled_det(h);
    kappa[h] = -fr.scaled_det(-1, -1, h) / dh;
    phh[h] = 2.0 + 2.0 * fr.l[h] * kappa[h];
  }
  for (int g = 0; g < m; ++g)
    for (int h = 0; h < m; ++h) {
      if (g == h)
        continue;
      double num = fr.nu[h][0] * fr.nu[g][0];
      if (d == 2) {
        num = dot(fr.nu[h], mat_vec(fr.adjQ, fr.nu[g]));
        for (int f = 0; f < m; ++f)
          if (f != g && f != h)
            num += cross(fr.nu[f], fr.nu[h]) * cross(fr.nu[f], fr.nu[g]) * 0.5 / fr.l[f];
      }
      pi[g * m + h] = num / fr.scaled_det(g, h);
    }
  auto p = [&](int g, int h) { return g == h ? phh[g] : fr.l[h] * pi[g * m + h]; };

  // G Q_i a_h terms.
  std::array<M2, 2> GdQ{};
  for (int i = 0; i < d; ++i)
    GdQ[i] = mul(G, dQ[i]);

  double facet_part = 0.0;
  for (int h = 0; h < m; ++h) {
    const auto& ah = fr.a[h];
    double grad_p = phh[h] * phh[h] * kappa[h];
    double div_a = kappa[h] * phh[h];
    for (int g = 0; g < m; ++g) {
      if (g == h)
        continue;
      grad_p += 0.5 * p(h, g) * pi[g * m + h] * p(g, h);
      div_a += 0.5 * pi[g * m + h] * phh[g];
    }
    for (int i = 0; i < d; ++i) {
      const auto v = mat_vec(GdQ[i], ah);
      grad_p -= ah[i] * dot(fr.nu[h], v);
      div_a -= v[i];
    }
    facet_part += grad_p + phh[h] * div_a;
  }

  // sum_ij d_i (G Q_j G)_ij with d_i G = 1/2 sum_h nu_hi a_h a_h^T - G Q_i G.
  std::array<M2, 2> dG{};
  for (int i = 0; i < d; ++i) {
    dG[i] = mul(GdQ[i], G);
    for (int k = 0; k < 4; ++k)
      dG[i][k] = -dG[i][k];
    for (int h = 0; h < m; ++h) {
      const double w = 0.5 * fr.nu[h][i];
      const auto& ah = fr.a[h];
      dG[i][0] += w * ah[0] * ah[0];
      dG[i][1] += w * ah[0] * ah[1];
      dG[i][2] += w * ah[1] * ah[0];
      dG[i][3] += w * ah[1] * ah[1];
    }
  }
  double q_part = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const M2 t = add(add(mul(mul(dG[i], dQ[j]), G), mul(mul(G, ddQ[i][j]), G)),
                       mul(mul(G, dQ[j]), dG[i]));
      q_part += t[2 * i + j];
    }
  return -0.5 * facet_part + q_part;
}

void SymplecticPotential::validate() const {
  const auto& v = polytope_.vertices();
  const int d = polytope_.dim();
  auto check = [&](const Point2& x) {
    const LocalMatrix H = hessian(x);
    M2 inv{};
    if (!invert_pd(d, H.a, inv))
      throw InvalidGeometry("symplectic potential is not strictly convex at (" +
                            std::to_string(x[0]) + ", " + std::to_string(x[1]) + ")");
  };
  if (d == 1) {
    constexpr int n = 1000;
    for (int i = 0; i < n; ++i)
      check({v[0][0] + (v[1][0] - v[0][0]) * (i + 0.5) / n, 0.0});
    return;
  }
  double xmin = v[0][0], xmax = v[0][0], ymin = v[0][1], ymax = v[0][1];
  for (const auto& p : v) {
    xmin = std::min(xmin, p[0]);
    xmax = std::max(xmax, p[0]);
    ymin = std::min(ymin, p[1]);
    ymax = std::max(ymax, p[1]);
  }
  constexpr int side = 32;
  const double margin = 1e-9 * std::max(xmax - xmin, ymax - ymin);
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j) {
      const Point2 x{xmin + (xmax - xmin) * (i + 0.5) / side,
                     ymin + (ymax - ymin) * (j + 0.5) / side};
      if (polytope_.clearance(x) > margin)
        check(x);
    }
}

LocalMatrix potential_inverse_hessian(const SymplecticPotential& u, const Point2& x) {
  const LocalMatrix Q = u.perturbation_hessian(x);
  LocalMatrix G;
  G.dim = Q.dim;
  G.a = make_frame(u.polytope(), Q.a, x).G;
  return G;
}

double scalar_curvature_toric(const SymplecticPotential& u, const Point2& x, double h) {
  const Polytope& P = u.polytope();
  if (h <= 0.0)
    h = 1e-3 * P.inradius_estimate();
  if (!(P.clearance(x) >= 2.0 * h))
    throw InputError("curvature stencil needs clearance >= 2h from every facet");
  const int d = P.dim();
  auto G = [&](double dx, double dy) { return potential_inverse_hessian(u, {x[0] + dx, x[1] + dy}); };
  auto second_difference = [&](double s) {
    const LocalMatrix c = G(0.0, 0.0);
    double acc = (G(s, 0.0)(0, 0) - 2.0 * c(0, 0) + G(-s, 0.0)(0, 0)) / (s * s);
    if (d == 2) {
      acc += (G(0.0, s)(1, 1) - 2.0 * c(1, 1) + G(0.0, -s)(1, 1)) / (s * s);
      const double mixed =
          (G(s, s)(0, 1) - G(s, -s)(0, 1) - G(-s, s)(0, 1) + G(-s, -s)(0, 1)) / (4.0 * s * s);
      acc += 2.0 * mixed;
    }
    return -acc;
  };
  const double coarse = second_difference(h);
  const double fine = second_difference(0.5 * h);
  return (4.0 * fine - coarse) / 3.0;
}

CurvatureSample sample_scalar_curvature(const SymplecticPotential& u, int npts, Exec exec) {
  if (npts < 1)
    throw InputError("curvature sample needs at least one point");
  const Polytope& P = u.polytope();
  const auto& v = P.vertices();
  std::vector<Point2> pts;
  if (P.dim() == 1) {
    for (int i = 0; i < npts; ++i)
      pts.push_back({v[0][0] + (v[1][0] - v[0][0]) * (i + 0.5) / npts, 0.0});
  } else {
    double xmin = v[0][0], xmax = v[0][0], ymin = v[0][1], ymax = v[0][1];
    for (const auto& p : v) {
      xmin = std::min(xmin, p[0]);
      xmax = std::max(xmax, p[0]);
      ymin = std::min(ymin, p[1]);
      ymax = std::max(ymax, p[1]);
    }
    const double margin = 1e-6 * std::max(xmax - xmin, ymax - ymin);
    for (int i = 0; i < npts; ++i)
      for (int j = 0; j < npts; ++j) {
        const Point2 x{xmin + (xmax - xmin) * (i + 0.5) / npts,
                       ymin + (ymax - ymin) * (j + 0.5) / npts};
        if (P.clearance(x) > margin)
          pts.push_back(x);
      }
  }
  const int n = static_cast<int>(pts.size());
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  if (exec == Exec::parallel) {
#pragma omp parallel for reduction(min : lo) reduction(max : hi) schedule(static)
    for (int i = 0; i < n; ++i) {
      const double s = u.scalar_curvature_exact(pts[i]);
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
  } else {
    for (int i = 0; i < n; ++i) {
      const double s = u.scalar_curvature_exact(pts[i]);
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
  }
  return {lo, hi, n};
}

IbpResult ibp_residual(const SymplecticPotential& u, const Polynomial2& F,
                       const numerics::QuadratureSetting& quad) {
  const Polytope& P = u.polytope();
  const int d = P.dim();
  if (d == 1 && F.depends_on_y())
    throw InputError("test function on a 1D polytope may not involve y");
  const Polynomial2 Fxx = F.partial(2, 0);
  const Polynomial2 Fxy = F.partial(1, 1);
  const Polynomial2 Fyy = F.partial(0, 2);

  IbpResult r;
  const auto interior = interior_integrate_escalating(
      P,
      [&](const Point2& x, std::span<double> out) {
        const LocalMatrix G = potential_inverse_hessian(u, x);
        double contraction = G(0, 0) * Fxx(x[0], x[1]);
        if (d == 2)
          contraction += 2.0 * G(0, 1) * Fxy(x[0], x[1]) + G(1, 1) * Fyy(x[0], x[1]);
        out[0] = contraction;
        out[1] = u.scalar_curvature_exact(x) * F(x[0], x[1]);
      },
      2, quad, &r.points);
  r.hessian_term = interior[0];
  r.curvature_term = interior[1];
  r.boundary_term =
      2.0 * boundary_integrate(P, [&](const Point2& x) { return F(x[0], x[1]); }, quad);
  r.residual = r.hessian_term - r.boundary_term + r.curvature_term;
  return r;
}

} // namespace specbound::toric
