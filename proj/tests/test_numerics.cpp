#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "specbound/errors.hpp"
#include "specbound/numerics/gen_eig.hpp"
#include "specbound/numerics/legendre_basis.hpp"
#include "specbound/numerics/polynomial.hpp"
#include "specbound/numerics/quadrature.hpp"
#include "specbound/numerics/sturm_liouville.hpp"
#include "specbound/numerics/tridiag.hpp"

#ifdef SPECBOUND_HAVE_EIGEN
#include <Eigen/Dense>
#endif

using namespace specbound;
using namespace specbound::numerics;
using doctest::Approx;

namespace {

void check_coeffs(const Polynomial& p, std::vector<double> want, double tol = 1e-15) {
  REQUIRE(p.degree() == static_cast<int>(want.size()) - 1);
  for (std::size_t i = 0; i < want.size(); ++i)
    CHECK(p.coeff(i) == Approx(want[i]).epsilon(tol));
}

SymMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  SymMatrix m(rows.size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (double v : r) {
      if (j <= i)
        m(i, j) = v;
      ++j;
    }
    ++i;
  }
  return m;
}

SymMatrix random_spd(std::size_t n, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> g(n * n);
  for (auto& v : g)
    v = u(rng);
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      double s = i == j ? 0.5 : 0.0;
      for (std::size_t l = 0; l < n; ++l)
        s += g[i * n + l] * g[j * n + l];
      m(i, j) = s;
    }
  return m;
}

} // namespace

TEST_CASE("polynomial basics") {
  CHECK(Polynomial{}.degree() == -1);
  CHECK(Polynomial{0.0, 0.0}.degree() == -1);
  CHECK(Polynomial{1.0, 2.0, 0.0}.degree() == 1);
  const Polynomial p{0.5, -1.25, 3.0, 0.75};
  // Dyadic inputs: Horner must agree bitwise with the plain sum.
  for (double x : {-2.0, -0.5, 0.0, 0.25, 1.5}) {
    const double direct = 0.5 - 1.25 * x + 3.0 * x * x + 0.75 * x * x * x;
    CHECK(p(x) == direct);
  }
  const Polynomial shifted = p.compose_affine(0.5, 2.0);
  for (double x : {-1.0, 0.0, 0.3, 2.0})
    CHECK(shifted(x) == Approx(p(0.5 + 2.0 * x)).epsilon(1e-14));
  const Polynomial prod = Polynomial{1.0, 1.0} * Polynomial{-1.0, 1.0};
  check_coeffs(prod, {-1.0, 0.0, 1.0});
}

TEST_CASE("poly_derivative") {
  check_coeffs(poly_derivative(Polynomial{4.0, -3.0}), {-3.0});
  check_coeffs(poly_derivative(Polynomial::monomial(3)), {0.0, 0.0, 3.0});
  check_coeffs(poly_derivative(Polynomial{1.0, 2.0, 3.0}), {2.0, 6.0});
  CHECK(poly_derivative(Polynomial{7.0}).degree() == -1);
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int deg = 1; deg < 9; ++deg) {
    std::vector<double> c(deg + 1);
    for (auto& v : c)
      v = u(rng);
    c.back() = 1.0 + std::abs(c.back());
    CHECK(poly_derivative(Polynomial(c)).degree() == deg - 1);
  }
}

TEST_CASE("poly_double_antiderivative_centered") {
  const double b = 1.7, c = -0.6;
  check_coeffs(poly_double_antiderivative_centered(Polynomial{b * b}, 0.0), {0.0, 0.0, b * b / 2});
  const Polynomial q = Polynomial{b, 2 * c} * Polynomial{b, 2 * c};
  check_coeffs(poly_double_antiderivative_centered(q, 0.0),
               {0.0, 0.0, b * b / 2, 2 * b * c / 3, c * c / 3}, 1e-14);
  CHECK(poly_double_antiderivative_centered(Polynomial{}, 0.3).is_zero());

  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<double> c(1 + trial % 7);
    for (auto& v : c)
      v = u(rng);
    const Polynomial dphi = poly_derivative(Polynomial(c));
    const Polynomial qq = dphi * dphi;
    const double xstar = u(rng);
    const Polynomial rho = poly_double_antiderivative_centered(qq, xstar);
    const Polynomial back = rho.derivative().derivative();
    for (int i = 0; i <= qq.degree(); ++i)
      CHECK(back.coeff(i) == Approx(qq.coeff(i)).epsilon(1e-12).scale(1.0));
    CHECK(std::abs(rho(xstar)) < 1e-14);
    CHECK(std::abs(rho.derivative()(xstar)) < 1e-14);
    for (int i = 0; i <= 400; ++i) {
      const double x = xstar - 2.0 + 4.0 * i / 400.0;
      CHECK(rho(x) >= -1e-13);
    }
  }
}

TEST_CASE("poly_integrate_interval") {
  CHECK(poly_integrate_interval(Polynomial::monomial(2), -1.0, 1.0) == Approx(2.0 / 3).epsilon(1e-15));
  CHECK(poly_integrate_interval(Polynomial{0.25, -1.0, 1.0}, 0.0, 1.0) ==
        Approx(1.0 / 12).epsilon(1e-14));
  CHECK(std::abs(poly_integrate_interval(Polynomial::monomial(3), -1.0, 1.0)) < 1e-16);
  CHECK_THROWS_AS(poly_integrate_interval(Polynomial{1.0}, 1.0, 0.0), InputError);
}

TEST_CASE("gauss_legendre") {
  const auto r1 = gauss_legendre(1);
  CHECK(r1.nodes[0] == 0.0);
  CHECK(r1.weights[0] == Approx(2.0).epsilon(1e-15));
  const auto r2 = gauss_legendre(2);
  CHECK(r2.nodes[0] == Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(r2.nodes[1] == Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(r2.weights[0] == Approx(1.0).epsilon(1e-15));
  CHECK(r2.weights[1] == Approx(1.0).epsilon(1e-15));
  const double x8 = integrate_fixed([](double x) { return std::pow(x, 8); }, -1.0, 1.0,
                                    gauss_legendre(5));
  CHECK(std::abs(x8 - 2.0 / 9) < 1e-14);
  CHECK_THROWS_AS(gauss_legendre(0), InputError);

  for (int n : {3, 8, 33, 200}) {
    const auto r = gauss_legendre(n);
    for (int i = 0; i < n; ++i) {
      CHECK(r.weights[i] > 0.0);
      CHECK(r.nodes[i] == -r.nodes[n - 1 - i]);
    }
  }

  // Exactness: random polynomials of degree 2n - 1 against their antiderivative.
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int n = 1; n <= 24; ++n) {
    std::vector<double> c(2 * n);
    for (auto& v : c)
      v = u(rng);
    const Polynomial p(c);
    const double a = -0.7, b = 1.9;
    const double exact = poly_integrate_interval(p, a, b);
    const double quad = integrate_fixed([&](double x) { return p(x); }, a, b, gauss_legendre(n));
    double mass = 0.0;
    for (int i = 0; i <= 400; ++i)
      mass = std::max(mass, std::abs(p(a + (b - a) * i / 400.0)));
    CHECK(std::abs(quad - exact) <= 1e-13 * std::max(std::abs(exact), mass * (b - a)));
  }
}

TEST_CASE("escalating quadrature") {
  const auto r = integrate_escalating([](double x) { return x * x * std::sqrt(x); }, 0.0, 1.0);
  CHECK(r.value == Approx(2.0 / 7).epsilon(1e-11));
  const auto e = integrate_escalating([](double x) { return std::exp(x); }, 0.0, 1.0);
  CHECK(e.value == Approx(std::numbers::e - 1.0).epsilon(1e-14));
  CHECK(e.points <= 32);
  QuadratureSetting tight;
  tight.rel_tol = 1e-16;
  tight.max_points = 64;
  CHECK_THROWS_AS(integrate_escalating([](double x) { return std::sqrt(x); }, 0.0, 1.0, tight),
                  NumericalError);
}

TEST_CASE("sym_gen_eigs examples") {
  auto v = sym_gen_eigs(from_rows({{2.0}}), from_rows({{1.0}}));
  REQUIRE(v.size() == 1);
  CHECK(v[0] == Approx(2.0).epsilon(1e-15));

  v = sym_gen_eigs(from_rows({{0.0, 0.0}, {0.0, 2.0}}), from_rows({{2.0, 0.0}, {0.0, 2.0 / 3}}));
  CHECK(std::abs(v[0]) < 1e-15);
  CHECK(v[1] == Approx(3.0).epsilon(1e-14));

  for (std::size_t n : {1u, 4u, 9u}) {
    const auto ones = sym_gen_eigs(SymMatrix::identity(n), SymMatrix::identity(n));
    for (double x : ones)
      CHECK(x == Approx(1.0).epsilon(1e-15));
  }
  CHECK_THROWS_AS(sym_gen_eigs(SymMatrix(2), SymMatrix(3)), InputError);
  CHECK_THROWS_AS(sym_gen_eigs(SymMatrix::identity(2), from_rows({{1.0, 2.0}, {2.0, 1.0}})),
                  NumericalError);
}

TEST_CASE("sym_gen_eigs against the 2x2 characteristic polynomial") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const SymMatrix A = random_spd(2, rng);
    const SymMatrix M = random_spd(2, rng);
    // det(A - l M) = 0 as a quadratic in l.
    const double qa = M(0, 0) * M(1, 1) - M(0, 1) * M(0, 1);
    const double qb = -(A(0, 0) * M(1, 1) + A(1, 1) * M(0, 0) - 2.0 * A(0, 1) * M(0, 1));
    const double qc = A(0, 0) * A(1, 1) - A(0, 1) * A(0, 1);
    const double disc = std::sqrt(qb * qb - 4.0 * qa * qc);
    const double big = (-qb + disc) / (2.0 * qa);
    const double small = qc / (qa * big);
    const auto v = sym_gen_eigs(A, M);
    CHECK(v[0] == Approx(small).epsilon(1e-12));
    CHECK(v[1] == Approx(big).epsilon(1e-12));
  }
}

TEST_CASE("sym_gen_eigs scale consistency and eigenvectors") {
  std::mt19937 rng(19);
  const SymMatrix A = random_spd(6, rng);
  const SymMatrix M = random_spd(6, rng);
  const auto base = sym_gen_eig_decompose(A, M);
  const auto scaledA = sym_gen_eigs(A * 3.5, M);
  const auto scaledM = sym_gen_eigs(A, M * 0.25);
  for (std::size_t i = 0; i < base.values.size(); ++i) {
    CHECK(scaledA[i] == Approx(3.5 * base.values[i]).epsilon(1e-12));
    CHECK(scaledM[i] == Approx(4.0 * base.values[i]).epsilon(1e-12));
  }
  for (std::size_t i = 0; i < base.values.size(); ++i) {
    const auto& x = base.vectors[i];
    CHECK(M.bilinear(x, x) == Approx(1.0).epsilon(1e-12));
    CHECK(A.bilinear(x, x) == Approx(base.values[i]).epsilon(1e-11));
    for (std::size_t j = 0; j < i; ++j)
      CHECK(std::abs(M.bilinear(x, base.vectors[j])) < 1e-11);
  }
}

#ifdef SPECBOUND_HAVE_EIGEN
TEST_CASE("sym_gen_eigs against Eigen's generalized solver") {
  std::mt19937 rng(99);
  for (std::size_t n : {3u, 7u, 15u}) {
    const SymMatrix A = random_spd(n, rng);
    const SymMatrix M = random_spd(n, rng);
    Eigen::MatrixXd a(n, n), m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = A(i, j);
        m(i, j) = M(i, j);
      }
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(a, m);
    const auto v = sym_gen_eigs(A, M);
    for (std::size_t i = 0; i < n; ++i)
      CHECK(v[i] == Approx(es.eigenvalues()(i)).epsilon(1e-10));
  }
}
#endif

TEST_CASE("tridiagonal bisection") {
  // Dirichlet second-difference matrix: eigenvalues 2 - 2 cos(k pi / (n + 1)).
  const int n = 50;
  TridiagEig t;
  t.diag.assign(n, 2.0);
  t.offdiag.assign(n - 1, -1.0);
  CHECK(sturm_count(t, -0.1) == 0);
  CHECK(sturm_count(t, 4.1) == n);
  const auto all = tridiag_eigs(t, 0, n, Exec::serial);
  for (int k = 0; k < n; ++k)
    CHECK(all[k] == Approx(2.0 - 2.0 * std::cos((k + 1) * std::numbers::pi / (n + 1))).epsilon(1e-13));
  const auto mid = tridiag_eigs(t, 10, 5, Exec::parallel);
  for (int k = 0; k < 5; ++k)
    CHECK(mid[k] == all[10 + k]);
  CHECK_THROWS_AS(tridiag_eigs(t, 48, 5), InputError);
}

TEST_CASE("sl_eigs classical oracles") {
  const auto legendre = sl_eigs([](double y) { return 1.0 - (y - 1.0) * (y - 1.0); }, 2.0, 2000, 6);
  CHECK(legendre[0] == 0.0);
  for (int k = 1; k < 6; ++k)
    CHECK(legendre[k] == Approx(k * (k + 1.0)).epsilon(1e-3));
  const auto cosines = sl_eigs([](double) { return 1.0; }, std::numbers::pi, 2000, 6);
  CHECK(cosines[0] == 0.0);
  for (int k = 1; k < 6; ++k)
    CHECK(cosines[k] == Approx(k * k).epsilon(1e-3));
  const auto scaled = sl_eigs([](double s) { return 2.0 * s * (1.0 - s); }, 1.0, 2000, 5);
  for (int k = 1; k < 5; ++k)
    CHECK(scaled[k] == Approx(2.0 * k * (k + 1.0)).epsilon(1e-3));
  // Neumann left, Dirichlet right on [0, pi]: (k + 1/2)^2.
  const auto mixed = sl_eigs([](double) { return 1.0; }, std::numbers::pi, 2000, 4,
                             RightBoundary::dirichlet);
  for (int k = 0; k < 4; ++k)
    CHECK(mixed[k] == Approx((k + 0.5) * (k + 0.5)).epsilon(1e-3));
}

TEST_CASE("sl_eigs input validation") {
  CHECK_THROWS_AS(sl_eigs([](double y) { return y - 0.5; }, 1.0, 100, 2), InputError);
  CHECK_THROWS_AS(sl_eigs([](double) { return 1.0; }, 1.0, 8, 2), InputError);
  CHECK_THROWS_AS(sl_eigs([](double) { return 1.0; }, -1.0, 100, 2), InputError);
}

TEST_CASE("sl_eigs mesh convergence on the Legendre oracle") {
  auto p = [](double y) { return 1.0 - (y - 1.0) * (y - 1.0); };
  const std::vector<int> meshes{500, 1000, 2000, 4000};
  std::vector<std::vector<double>> runs;
  for (int m : meshes)
    runs.push_back(sl_eigs(p, 2.0, m, 6));
  for (int k = 1; k < 6; ++k) {
    const double exact = k * (k + 1.0);
    double prev_err = std::abs(runs[0][k] - exact);
    for (std::size_t i = 1; i < runs.size(); ++i) {
      const double err = std::abs(runs[i][k] - exact);
      CHECK(err < prev_err);
      prev_err = err;
    }
    const double order = std::log2((runs[1][k] - runs[0][k]) / (runs[2][k] - runs[1][k]));
    CHECK(order == Approx(2.0).epsilon(0.15));
  }
}

TEST_CASE("serial and parallel SL paths agree bitwise") {
  auto p = [](double y) { return std::exp(-y) * y * (3.0 - y); };
  const auto s = sl_eigs(p, 3.0, 3000, 8, RightBoundary::natural, Exec::serial);
  const auto q = sl_eigs(p, 3.0, 3000, 8, RightBoundary::natural, Exec::parallel);
  REQUIRE(s.size() == q.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    CHECK(s[i] == q[i]);
}

TEST_CASE("sl_spectrum metadata and refinement") {
  auto p = [](double y) { return 1.0 - (y - 1.0) * (y - 1.0); };
  SpectrumOptions opts;
  opts.mesh = 200;
  opts.refine = true;
  opts.refine_tol = 1e-5;
  const auto r = sl_spectrum(p, 2.0, 3, opts);
  CHECK(r.mesh > 200);
  CHECK(r.coarse_mesh == r.mesh / 2);
  CHECK(r.relative_change < 1e-5);
  REQUIRE(r.eigenvalues.size() == 4);
  CHECK(r.eigenvalues[3] == Approx(12.0).epsilon(1e-4));
}

TEST_CASE("legendre trial basis spans the monomials") {
  const auto L = legendre_polynomials(6);
  REQUIRE(L.size() == 7);
  check_coeffs(L[2], {-0.5, 0.0, 1.5});
  for (std::size_t i = 0; i < L.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      CHECK(std::abs(poly_integrate_interval(L[i] * L[j], -1.0, 1.0)) < 1e-14);
  const auto M = monomials(3);
  check_coeffs(M[3], {0.0, 0.0, 0.0, 1.0});
}
