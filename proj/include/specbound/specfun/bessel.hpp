#ifndef SPECBOUND_SPECFUN_BESSEL_HPP
#define SPECBOUND_SPECFUN_BESSEL_HPP

#include <vector>

namespace specbound::specfun {

/// J_0 from its power series sum (-1)^m (x/2)^{2m} / (m!)^2. Terms are
/// accumulated in double for |x| <= 12 and in binary128 beyond, where the
/// alternating terms cancel heavily. Throws InputError for |x| > 50.
double bessel_j0(double x);

/// J_0'(x) = -J_1(x) from the term-differentiated series; same range.
double bessel_j0_prime(double x);

/// First `count` positive zeros of J_0 (resp. J_0'), by a sign scan with
/// step 0.1 followed by bisection to 1e-13.
std::vector<double> j0_zeros(int count);
std::vector<double> j0_prime_zeros(int count);

/// Abreu-Freitas constant: xi_k is the ((k+1)/2)-th positive zero of J_0
/// for odd k and the (k/2)-th positive zero of J_0' for even k.
struct AFConstant {
  int k = 0;
  double xi = 0.0;
  double bound = 0.0; ///< xi^2 / 2
};

/// Throws InputError unless 1 <= k <= 20.
AFConstant xi_k(int k);

} // namespace specbound::specfun

#endif // SPECBOUND_SPECFUN_BESSEL_HPP
