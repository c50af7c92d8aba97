#ifndef SPECBOUND_NUMERICS_LEGENDRE_BASIS_HPP
#define SPECBOUND_NUMERICS_LEGENDRE_BASIS_HPP

#include <vector>

#include "specbound/numerics/polynomial.hpp"

namespace specbound::numerics {

enum class TrialBasis { legendre, monomial };

/// P_0 .. P_k on [-1, 1] in monomial coefficients (Bonnet recurrence).
std::vector<Polynomial> legendre_polynomials(int k);

/// 1, x, .., x^k
std::vector<Polynomial> monomials(int k);

} // namespace specbound::numerics

#endif // SPECBOUND_NUMERICS_LEGENDRE_BASIS_HPP
