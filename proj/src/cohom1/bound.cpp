#include "specbound/cohom1/bound.hpp"

#include <cmath>

#include "specbound/cohom1/profile.hpp"
#include "specbound/errors.hpp"
#include "specbound/numerics/gen_eig.hpp"
#include "specbound/numerics/legendre_basis.hpp"

namespace specbound::cohom1 {

using numerics::Polynomial;
using numerics::SymMatrix;

Cohom1BoundResult compute_Dk(int n, int k, const numerics::QuadratureSetting& quad) {
  if (n < 2)
    throw InputError("sphere dimension must be >= 2");
  if (k < 0)
    throw InputError("trial space degree k must be non-negative");
  // Basis b_j(s) = P_j(2s - 1).
  std::vector<Polynomial> b;
  for (const auto& p : numerics::legendre_polynomials(k))
    b.push_back(p.compose_affine(-1.0, 2.0));
  const std::size_t m = b.size();
  std::vector<Polynomial> db;
  for (const auto& p : b)
    db.push_back(p.derivative());

  Cohom1BoundResult r;
  r.n = n;
  r.k = k;
  r.A = SymMatrix(m);
  r.M = SymMatrix(m);

  // Left half [0, 1/2] carries the weight (n s)^{(2n-2)/n}; the right half is
  // folded onto it through s -> 1 - s. Substituting s = v^n / n turns the
  // weighted integrand into a polynomial in v, so Gauss rules become exact.
  // The two halves stay separate components so that the convergence test is
  // not fooled when they cancel.
  const double vmax = std::pow(0.5 * n, 1.0 / n);
  const std::size_t comps = m * (m + 1) / 2;
  const auto halves = numerics::integrate_escalating_vec(
      [&](double v, std::span<double> out) {
        const double vn1 = std::pow(v, n - 1);
        const double s = vn1 * v / n;
        const double w = vn1 * vn1 * vn1; // weight v^{2n-2} times ds/dv = v^{n-1}
        std::size_t c = 0;
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j <= i; ++j, ++c) {
            out[c] = w * db[i](s) * db[j](s);
            out[comps + c] = w * db[i](1.0 - s) * db[j](1.0 - s);
          }
      },
      2 * comps, 0.0, vmax, quad, &r.quadrature_points);
  std::size_t c = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= i; ++j, ++c) {
      r.A(i, j) = halves[c] + halves[comps + c];
      r.M(i, j) = numerics::poly_integrate_interval(b[i] * b[j], 0.0, 1.0);
    }

  const auto eig = numerics::sym_gen_eig_decompose(r.A, r.M);
  r.value = std::max(0.0, eig.values.back());
  Polynomial phi;
  for (std::size_t j = 0; j < m; ++j)
    phi += b[j] * eig.vectors.back()[j];
  if (phi.degree() >= 0 && phi.coeff(static_cast<std::size_t>(phi.degree())) < 0.0)
    phi *= -1.0;
  r.maximizer = phi;
  return r;
}

} // namespace specbound::cohom1
