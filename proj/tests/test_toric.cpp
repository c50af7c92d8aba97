#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "specbound/errors.hpp"
#include "specbound/numerics/polynomial.hpp"
#include "specbound/toric/bound.hpp"
#include "specbound/toric/io.hpp"
#include "specbound/toric/polytope.hpp"
#include "specbound/toric/potential.hpp"
#include "specbound/toric/spectrum.hpp"

using namespace specbound;
using namespace specbound::toric;
using numerics::Polynomial;
using numerics::Polynomial2;
using numerics::TrialBasis;
using doctest::Approx;

namespace {

Polytope square(double side = 1.0) {
  return polytope_from_vertices(2, {{0, 0}, {side, 0}, {side, side}, {0, side}});
}
Polytope simplex() { return polytope_from_vertices(2, {{0, 0}, {1, 0}, {0, 1}}); }
Polytope rectangle() { return polytope_from_vertices(2, {{0, 0}, {2, 0}, {2, 1}, {0, 1}}); }

Polynomial2 monomial2(int i, int j, double c = 1.0) {
  Polynomial2 p;
  p.set(i, j, c);
  return p;
}

bool has_normal(const Polytope& P, long a, long b) {
  for (const auto& f : P.facets())
    if (f.normal[0] == a && f.normal[1] == b)
      return true;
  return false;
}

// Independent 1D Rayleigh bound for a trial function phi on [a, b]:
// 2 (rho(a) + rho(b)) / int phi^2, rho the centred double antiderivative of phi'^2.
double interval_bound_ratio(const Polynomial& phi, double a, double b) {
  const Polynomial dphi = phi.derivative();
  const Polynomial rho = numerics::poly_double_antiderivative_centered(dphi * dphi, 0.5 * (a + b));
  return 2.0 * (rho(a) + rho(b)) / numerics::poly_integrate_interval(phi * phi, a, b);
}

} // namespace

TEST_CASE("polytope_from_vertices") {
  const Polytope I = interval(-1.0, 1.0);
  REQUIRE(I.facets().size() == 2);
  CHECK(I.facets()[0].normal[0] == 1);
  CHECK(I.facets()[0].offset == 1.0);
  CHECK(I.facets()[1].normal[0] == -1);
  CHECK(I.facets()[1].offset == 1.0);
  CHECK(I.facet_value(0, {0.25, 0}) == 1.25);
  CHECK(I.facet_value(1, {0.25, 0}) == 0.75);

  const Polytope S = square();
  CHECK(S.facets().size() == 4);
  CHECK(has_normal(S, 1, 0));
  CHECK(has_normal(S, 0, 1));
  CHECK(has_normal(S, -1, 0));
  CHECK(has_normal(S, 0, -1));
  CHECK(S.delzant());

  const Polytope T = polytope_from_vertices(2, {{0, 0}, {1, 0}, {0, 2}});
  CHECK(has_normal(T, -2, -1));
  CHECK_FALSE(T.delzant());
  CHECK(simplex().delzant());

  for (const auto& P : {S, T, simplex(), rectangle()})
    for (const auto& f : P.facets())
      CHECK(std::gcd(f.normal[0], f.normal[1]) == 1);
}

TEST_CASE("polytope_from_vertices rejects bad input") {
  CHECK_THROWS_AS(interval(1.0, 1.0), InputError);
  CHECK_THROWS_AS(polytope_from_vertices(2, {{0, 0}, {1, 0}}), InputError);
  // Clockwise order.
  CHECK_THROWS_AS(polytope_from_vertices(2, {{0, 0}, {0, 1}, {1, 1}, {1, 0}}), InputError);
  // Non-convex.
  CHECK_THROWS_AS(polytope_from_vertices(2, {{0, 0}, {2, 0}, {1, 0.5}, {2, 2}, {0, 2}}),
                  InputError);
  // Repeated vertex.
  CHECK_THROWS_AS(polytope_from_vertices(2, {{0, 0}, {1, 0}, {1, 0}, {0, 1}}), InputError);
  try {
    polytope_from_vertices(2, {{0, 0}, {1, std::numbers::sqrt2}, {0, 2}});
    FAIL("irrational edge accepted");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("not a lattice polytope") != std::string::npos);
  }
}

TEST_CASE("boundary measure and integration") {
  const Polytope I = interval(-1.0, 1.0);
  const auto m = boundary_measure(I);
  REQUIRE(m.size() == 2);
  CHECK(m[0] == 1.0);
  CHECK(m[1] == 1.0);
  CHECK(boundary_integrate(I, [](const Point2& x) { return x[0] * x[0]; }) == 2.0);
  CHECK(boundary_integrate(square(), [](const Point2&) { return 1.0; }) ==
        Approx(4.0).epsilon(1e-14));
  const double b = 1.3;
  CHECK(boundary_integrate(I, [&](const Point2& x) { return b * b * x[0] * x[0] / 2; }) ==
        Approx(b * b).epsilon(1e-15));
  // The hypotenuse of the simplex has normal (-1,-1): length sqrt2 / sqrt2 = 1.
  CHECK(boundary_integrate(simplex(), [](const Point2&) { return 1.0; }) ==
        Approx(3.0).epsilon(1e-14));
  CHECK(interior_integrate_fixed(simplex(), [](const Point2& x) { return x[0] * x[1]; }, 4) ==
        Approx(1.0 / 24).epsilon(1e-14));
}

TEST_CASE("inverse Hessian of the Guillemin potential") {
  const SymplecticPotential u(interval(-1.0, 1.0));
  CHECK(potential_inverse_hessian(u, {0.0, 0.0})(0, 0) == Approx(1.0).epsilon(1e-15));
  for (double x : {-0.9, -0.3, 0.2, 0.75})
    CHECK(potential_inverse_hessian(u, {x, 0.0})(0, 0) == Approx(1.0 - x * x).epsilon(1e-14));
  const SymplecticPotential us(square());
  const auto h = potential_inverse_hessian(us, {0.5, 0.5});
  CHECK(h(0, 0) == Approx(0.5).epsilon(1e-15));
  CHECK(h(1, 1) == Approx(0.5).epsilon(1e-15));
  CHECK(std::abs(h(0, 1)) < 1e-16);
  CHECK_THROWS_AS(potential_inverse_hessian(u, {1.0, 0.0}), InputError);
  CHECK_THROWS_AS(potential_inverse_hessian(u, {1.5, 0.0}), InputError);

  const SymplecticPotential bad(interval(-1.0, 1.0), monomial2(2, 0, -5.0));
  CHECK_THROWS_AS(bad.validate(), InvalidGeometry);
  CHECK_THROWS_AS(SymplecticPotential(interval(-1.0, 1.0), monomial2(1, 1)), InputError);
}

TEST_CASE("Abreu scalar curvature") {
  const SymplecticPotential u(interval(-1.0, 1.0));
  for (double x : {-0.8, 0.0, 0.33, 0.9}) {
    CHECK(scalar_curvature_toric(u, {x, 0}) == Approx(2.0).epsilon(1e-6));
    CHECK(u.scalar_curvature_exact({x, 0}) == Approx(2.0).epsilon(1e-12));
  }
  const SymplecticPotential us(square());
  for (Point2 x : {Point2{0.5, 0.5}, Point2{0.2, 0.7}, Point2{0.9, 0.15}}) {
    CHECK(scalar_curvature_toric(us, x) == Approx(8.0).epsilon(1e-6));
    CHECK(us.scalar_curvature_exact(x) == Approx(8.0).epsilon(1e-12));
  }
  // The simplex carries Fubini-Study, which is Einstein: constant curvature.
  const SymplecticPotential ut(simplex());
  std::vector<double> vals;
  for (int i = 1; i <= 10; ++i)
    for (int j = 1; j <= 10; ++j) {
      const double x = 0.9 * i / 11.0, y = 0.9 * j / 11.0 * (1.0 - x);
      vals.push_back(scalar_curvature_toric(ut, {x + 0.01, y + 0.01}));
    }
  const double mean = std::accumulate(vals.begin(), vals.end(), 0.0) / vals.size();
  double var = 0.0;
  for (double v : vals)
    var += (v - mean) * (v - mean);
  CHECK(std::sqrt(var / vals.size()) < 1e-4);
  // Same normalisation as the interval (4) and square (8): 2 n (n + 1) for n = 2.
  CHECK(mean == Approx(12.0).epsilon(1e-6));

  CHECK_THROWS_AS(scalar_curvature_toric(u, {0.999, 0}, 0.01), InputError);
}

TEST_CASE("finite-difference curvature agrees with the closed form and converges at order 2") {
  Polynomial2 pert = monomial2(4, 0, 0.05);
  pert.set(1, 2, 0.02);
  pert.set(3, 1, -0.01);
  const SymplecticPotential u(square(), pert);
  u.validate();
  for (Point2 x : {Point2{0.3, 0.6}, Point2{0.5, 0.5}, Point2{0.8, 0.25}}) {
    const double exact = u.scalar_curvature_exact(x);
    CHECK(scalar_curvature_toric(u, x) == Approx(exact).epsilon(1e-6));
  }
  const SymplecticPotential u1(interval(-1.0, 1.0), monomial2(4, 0, 0.05));
  const Point2 x{0.4, 0.0};
  const double exact = u1.scalar_curvature_exact(x);
  const double e1 = std::abs(scalar_curvature_toric(u1, x, 0.04) - exact);
  const double e2 = std::abs(scalar_curvature_toric(u1, x, 0.02) - exact);
  CHECK(e2 < e1);
}

TEST_CASE("curvature sampling serial and parallel agree") {
  const SymplecticPotential u(square(), monomial2(2, 2, 0.1));
  const auto s = sample_scalar_curvature(u, 1000, Exec::serial);
  const auto p = sample_scalar_curvature(u, 1000, Exec::parallel);
  CHECK(s.min == p.min);
  CHECK(s.max == p.max);
  CHECK(s.points == p.points);
}

TEST_CASE("integration-by-parts residual") {
  const SymplecticPotential u(interval(-1.0, 1.0));
  const auto r2 = ibp_residual(u, monomial2(2, 0));
  CHECK(r2.hessian_term == Approx(8.0 / 3).epsilon(1e-12));
  CHECK(r2.boundary_term == Approx(4.0).epsilon(1e-14));
  CHECK(r2.curvature_term == Approx(4.0 / 3).epsilon(1e-12));
  CHECK(std::abs(r2.residual) < 1e-12);
  const auto r0 = ibp_residual(u, monomial2(0, 0));
  CHECK(r0.curvature_term == Approx(4.0).epsilon(1e-12));
  CHECK(std::abs(r0.residual) < 1e-12);

  const SymplecticPotential up(interval(-1.0, 1.0), monomial2(4, 0, 0.05));
  CHECK(std::abs(ibp_residual(up, monomial2(2, 0)).residual) < 1e-6);

  Polynomial2 pert = monomial2(2, 2, 0.1);
  pert.set(3, 0, 0.02);
  const SymplecticPotential us(square(), pert);
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; i + j <= 3; ++j)
      CHECK(std::abs(ibp_residual(us, monomial2(i, j)).residual) < 1e-6);
  const SymplecticPotential ut(simplex());
  CHECK(std::abs(ibp_residual(ut, monomial2(1, 1)).residual) < 1e-6);
}

TEST_CASE("assemble_bound_matrices") {
  const auto p = assemble_bound_matrices(interval(-1.0, 1.0), {1, 0}, 1, TrialBasis::monomial);
  CHECK(p.A(0, 0) == 0.0);
  CHECK(p.A(0, 1) == 0.0);
  CHECK(p.A(1, 1) == Approx(2.0).epsilon(1e-15));
  CHECK(p.M(0, 0) == Approx(2.0).epsilon(1e-15));
  CHECK(std::abs(p.M(0, 1)) < 1e-16);
  CHECK(p.M(1, 1) == Approx(2.0 / 3).epsilon(1e-15));

  const auto p0 = assemble_bound_matrices(interval(-1.0, 1.0), {1, 0}, 0);
  REQUIRE(p0.A.order() == 1);
  CHECK(p0.A(0, 0) == 0.0);

  // Unit square along e1 in the raw monomial basis {1, t}.
  const auto q = assemble_bound_matrices(square(), {1, 0}, 1, TrialBasis::monomial);
  CHECK(q.A(1, 1) == Approx(2.0 / 3).epsilon(1e-14));
  const double schur = q.M(1, 1) - q.M(0, 1) * q.M(0, 1) / q.M(0, 0);
  CHECK(schur == Approx(1.0 / 12).epsilon(1e-14));

  CHECK_THROWS_AS(assemble_bound_matrices(square(), {0, 0}, 1), InputError);
  CHECK_THROWS_AS(assemble_bound_matrices(interval(-1.0, 1.0), {0, 0}, 1), InputError);
}

TEST_CASE("compute_Ck closed forms") {
  const Polytope I = interval(-1.0, 1.0);
  CHECK(compute_Ck(I, 1).value == Approx(3.0).epsilon(1e-12));
  CHECK(compute_Ck(I, 2).value == Approx(7.5).epsilon(1e-12));
  CHECK(compute_Ck(square(), 1, {1, 0}).value == Approx(8.0).epsilon(1e-12));
  CHECK(compute_Ck(interval(0.0, 1.0), 1).value == Approx(6.0).epsilon(1e-12));
  CHECK(compute_Ck(polytope_from_vertices(2, {{0, 0}, {1, 0}, {0, 2}}), 1).formal);
  CHECK_FALSE(compute_Ck(square(), 1).formal);
  CHECK_THROWS_AS(compute_Ck(I, 0), InputError);
}

TEST_CASE("the maximiser realises C_k under an independent Rayleigh evaluation") {
  // The maximiser is reported in raw t; on [0,1] the raw monomial coefficients
  // cancel badly by k = 6 (several 1e-9 relative), hence the loose tolerance.
  for (auto [a, b] : {std::pair{-1.0, 1.0}, std::pair{0.0, 1.0}, std::pair{-2.0, 1.0}}) {
    const Polytope I = interval(a, b);
    for (int k = 1; k <= 6; ++k) {
      const auto r = compute_Ck(I, k);
      CHECK(interval_bound_ratio(r.maximizer, a, b) == Approx(r.value).epsilon(1e-8));
      // No other trial function in V_k should beat it.
      for (int j = 1; j <= k; ++j) {
        const Polynomial probe = r.maximizer + Polynomial::monomial(j, 0.01);
        CHECK(interval_bound_ratio(probe, a, b) <= r.value * (1.0 + 1e-12));
      }
    }
  }
}

TEST_CASE("C_k scaling laws, monotonicity and basis independence") {
  const std::vector<Polytope> shapes{interval(-1.0, 1.0), square(), interval(0.0, 1.0), simplex(),
                                     rectangle()};
  for (const auto& P : {shapes[0], shapes[1]})
    for (double lam : {0.5, 2.0, 3.0})
      for (int k = 1; k <= 4; ++k)
        CHECK(compute_Ck(P.dilated(lam), k).value * lam ==
              Approx(compute_Ck(P, k).value).epsilon(1e-10));
  for (const auto& P : shapes) {
    for (int k = 1; k <= 4; ++k)
      CHECK(compute_Ck(P.translated({3.0, -2.0}), k).value ==
            Approx(compute_Ck(P, k).value).epsilon(1e-12));
    double prev = 0.0;
    for (int k = 1; k <= 9; ++k) {
      const double v = compute_Ck(P, k).value;
      CHECK(v >= prev);
      prev = v;
    }
    for (int k = 1; k <= 6; ++k)
      CHECK(compute_Ck(P, k, {1, 0}, TrialBasis::monomial).value ==
            Approx(compute_Ck(P, k).value).epsilon(1e-9));
  }
}

TEST_CASE("direction_sweep") {
  const auto sq = direction_sweep(square(), 1, 16);
  CHECK(sq.value <= 8.0 + 1e-12);
  for (const auto& P : {square(), simplex(), rectangle()})
    for (int k = 1; k <= 3; ++k)
      CHECK(direction_sweep(P, k, 12).value <= compute_Ck(P, k, {1, 0}).value + 1e-12);
  const auto rect = direction_sweep(rectangle(), 1, 16);
  const double ax = compute_Ck(rectangle(), 1, {1, 0}).value;
  const double ay = compute_Ck(rectangle(), 1, {0, 1}).value;
  CHECK(rect.value <= std::min(ax, ay) + 1e-12);
  const auto s = direction_sweep(rectangle(), 2, 12, Exec::serial);
  const auto p = direction_sweep(rectangle(), 2, 12, Exec::parallel);
  CHECK(s.value == p.value);
  CHECK(s.sample_values == p.sample_values);
  CHECK_THROWS_AS(direction_sweep(interval(-1.0, 1.0), 1, 16), InputError);
  CHECK_THROWS_AS(direction_sweep(square(), 1, 4), InputError);
}

TEST_CASE("toric1d spectrum") {
  const auto r = toric1d_spectrum(SymplecticPotential(interval(-1.0, 1.0)), 5);
  for (int k = 1; k <= 5; ++k)
    CHECK(r.eigenvalues[k] == Approx(k * (k + 1.0)).epsilon(1e-3));
  const auto h = toric1d_spectrum(SymplecticPotential(interval(0.0, 1.0)), 3);
  for (int k = 1; k <= 3; ++k)
    CHECK(h.eigenvalues[k] == Approx(2.0 * k * (k + 1.0)).epsilon(1e-3));
  const SymplecticPotential up(interval(-1.0, 1.0), monomial2(4, 0, 0.05));
  const auto pr = toric1d_spectrum(up, 1);
  CHECK(std::abs(pr.eigenvalues[1] - 2.0) > 1e-3);
  REQUIRE(sample_scalar_curvature(up, 1000).min >= 0.0);
  CHECK(pr.eigenvalues[1] <= 3.0);
  CHECK_THROWS_AS(toric1d_spectrum(SymplecticPotential(square()), 2), InputError);
}

TEST_CASE("toric file parsing") {
  std::istringstream in("# square\ndim 2\nv 0 0\nv 1 0\nv 1 1  # corner\nv 0 1\nguillemin\n"
                        "perturb 2 1 0.25\n");
  const auto f = parse_toric(in);
  REQUIRE(f.polytope);
  CHECK(f.polytope->facets().size() == 4);
  CHECK(f.has_potential);
  CHECK(f.perturbation.coeff(2, 1) == 0.25);

  std::istringstream pot("guillemin\nperturb 4 0.05\n");
  const auto g = parse_toric(pot);
  CHECK_FALSE(g.polytope);
  CHECK(g.perturbation.coeff(4, 0) == 0.05);

  for (const char* bad : {"dim 3\n", "dim 1\nv 0\nv x\n", "dim 2\nv 0 0\nv 1\n", "frobnicate\n",
                          "perturb 2 0.1\n", "dim 1\nv 0\nv 1\nperturb -1 2\n"}) {
    std::istringstream s(bad);
    CHECK_THROWS_AS(parse_toric(s), InputError);
  }
  try {
    std::istringstream s("dim 1\nv 0\nv 1 2 3\n");
    parse_toric(s);
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(read_toric_file("/nonexistent/file.txt"), InputError);
}
