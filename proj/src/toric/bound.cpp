#include "specbound/toric/bound.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "specbound/errors.hpp"
#include "specbound/numerics/gen_eig.hpp"

namespace specbound::toric {

using numerics::Polynomial;
using numerics::SymMatrix;
using numerics::TrialBasis;

namespace {

Point2 normalise_direction(const Polytope& P, Point2 w) {
  if (P.dim() == 1) {
    if (w[0] == 0.0)
      throw InputError("direction for a 1D polytope must be +1 or -1");
    return {w[0] > 0.0 ? 1.0 : -1.0, 0.0};
  }
  const double n = std::hypot(w[0], w[1]);
  if (!(n > 0.0) || !std::isfinite(n))
    throw InputError("direction must be a nonzero finite vector");
  return {w[0] / n, w[1] / n};
}

} // namespace

BoundPencil assemble_bound_matrices(const Polytope& P, Point2 direction, int k,
                                    TrialBasis basis) {
  if (k < 0)
    throw InputError("trial space degree k must be non-negative");
  BoundPencil out;
  out.direction = normalise_direction(P, direction);
  out.basis = basis;
  std::tie(out.t_min, out.t_max) = P.support(out.direction);
  if (!(out.t_max - out.t_min >= 1e-12))
    throw NumericalError("degenerate direction: polytope has zero width along it");

  // Both bases live in a variable centred at t*; the Legendre one is also
  // scaled to [-1, 1]. The scale cancels between A and M.
  const Point2 w = out.direction;
  const double tc = out.t_center();
  const double scale = basis == TrialBasis::legendre ? out.half_width() : 1.0;
  out.basis_polys =
      basis == TrialBasis::legendre ? numerics::legendre_polynomials(k) : numerics::monomials(k);
  auto coord = [=](const Point2& x) { return (w[0] * x[0] + w[1] * x[1] - tc) / scale; };
  const auto& b = out.basis_polys;
  const std::size_t n = b.size();
  std::vector<Polynomial> db;
  for (const auto& p : b)
    db.push_back(numerics::poly_derivative(p));

  out.A = SymMatrix(n);
  out.M = SymMatrix(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const Polynomial rho = numerics::poly_double_antiderivative_centered(db[i] * db[j], 0.0);
      out.A(i, j) = 2.0 * boundary_integrate_fixed(
                              P, [&](const Point2& x) { return rho(coord(x)); }, k + 1);
      const Polynomial prod = b[i] * b[j];
      out.M(i, j) =
          interior_integrate_fixed(P, [&](const Point2& x) { return prod(coord(x)); }, k + 2);
    }
  return out;
}

ToricBoundResult compute_Ck(const Polytope& P, int k, Point2 direction, TrialBasis basis) {
  if (k < 1)
    throw InputError("C_k requires k >= 1");
  ToricBoundResult r;
  r.k = k;
  r.pencil = assemble_bound_matrices(P, direction, k, basis);
  r.direction = r.pencil.direction;
  r.formal = !P.delzant();
  const auto eig = numerics::sym_gen_eig_decompose(r.pencil.A, r.pencil.M);
  r.value = std::max(0.0, eig.values.back());
  const auto& c = eig.vectors.back();
  Polynomial phi;
  for (std::size_t j = 0; j < c.size(); ++j)
    phi += r.pencil.basis_polys[j] * c[j];
  const double scale = basis == TrialBasis::legendre ? r.pencil.half_width() : 1.0;
  phi = phi.compose_affine(-r.pencil.t_center() / scale, 1.0 / scale);
  // Fix the sign so the leading coefficient is positive.
  if (phi.degree() >= 0 && phi.coeff(static_cast<std::size_t>(phi.degree())) < 0.0)
    phi *= -1.0;
  r.maximizer = phi;
  return r;
}

SweepResult direction_sweep(const Polytope& P, int k, int nsamples, Exec exec) {
  if (P.dim() != 2)
    throw InputError("direction sweep needs a 2D polytope");
  if (nsamples < 8)
    throw InputError("direction sweep needs at least 8 samples");
  const double pi = std::numbers::pi;
  auto value_at = [&](double theta) {
    return compute_Ck(P, k, {std::cos(theta), std::sin(theta)}).value;
  };

  SweepResult s;
  s.sample_values.assign(nsamples, 0.0);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < nsamples; ++i)
      s.sample_values[i] = value_at(pi * i / nsamples);
  } else {
    for (int i = 0; i < nsamples; ++i)
      s.sample_values[i] = value_at(pi * i / nsamples);
  }
  const auto best = std::min_element(s.sample_values.begin(), s.sample_values.end());
  const int ib = static_cast<int>(best - s.sample_values.begin());
  double theta_best = pi * ib / nsamples;
  double v_best = *best;

  // C_k(theta) has period pi (w and -w give the same pencil up to sign).
  const double step = pi / nsamples;
  double a = theta_best - step;
  double b = theta_best + step;
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - g * (b - a);
  double x2 = a + g * (b - a);
  double f1 = value_at(x1);
  double f2 = value_at(x2);
  while (b - a > 1e-6) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - g * (b - a);
      f1 = value_at(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + g * (b - a);
      f2 = value_at(x2);
    }
  }
  const double xm = 0.5 * (a + b);
  const double fm = value_at(xm);
  if (fm < v_best) {
    v_best = fm;
    theta_best = xm;
  }
  theta_best = std::fmod(theta_best, pi);
  if (theta_best < 0.0)
    theta_best += pi;
  s.angle = theta_best;
  s.direction = {std::cos(theta_best), std::sin(theta_best)};
  s.value = v_best;
  return s;
}

} // namespace specbound::toric
