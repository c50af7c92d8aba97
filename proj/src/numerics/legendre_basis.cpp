#include "specbound/numerics/legendre_basis.hpp"

namespace specbound::numerics {

std::vector<Polynomial> legendre_polynomials(int k) {
  std::vector<Polynomial> p;
  p.reserve(k + 1);
  p.push_back(Polynomial{1.0});
  if (k >= 1)
    p.push_back(Polynomial{0.0, 1.0});
  const Polynomial x{0.0, 1.0};
  for (int n = 1; n < k; ++n) {
    // (n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}
    Polynomial next = (x * p[n]) * (2.0 * n + 1.0) - p[n - 1] * static_cast<double>(n);
    p.push_back(next * (1.0 / (n + 1.0)));
  }
  return p;
}

std::vector<Polynomial> monomials(int k) {
  std::vector<Polynomial> m;
  m.reserve(k + 1);
  for (int j = 0; j <= k; ++j)
    m.push_back(Polynomial::monomial(j));
  return m;
}

} // namespace specbound::numerics
