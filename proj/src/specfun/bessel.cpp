#include "specbound/specfun/bessel.hpp"

#include <cmath>

#include "specbound/errors.hpp"

namespace specbound::specfun {

namespace {

#if defined(__SIZEOF_FLOAT128__)
using Wide = __float128;
#else
using Wide = long double;
#endif

constexpr double kMaxArg = 50.0;

template <typename Real>
Real sum_j0(Real half) {
  // term_m = (-1)^m half^{2m} / (m!)^2
  const Real h2 = half * half;
  Real term = 1;
  Real sum = 1;
  for (int m = 1; m < 400; ++m) {
    term = -term * h2 / (static_cast<Real>(m) * static_cast<Real>(m));
    sum += term;
    const Real a = term < 0 ? -term : term;
    const Real s = sum < 0 ? -sum : sum;
    if (m > half && a <= static_cast<Real>(1e-17) * s)
      break;
  }
  return sum;
}

template <typename Real>
Real sum_j0_prime(Real half) {
  // d/dx of (x/2)^{2m} / (m!)^2 is m (x/2)^{2m-1} / (m!)^2
  //   = half^{2m-1} / (m! (m-1)!)
  const Real h2 = half * half;
  Real term = -half; // m = 1
  Real sum = term;
  for (int m = 2; m < 400; ++m) {
    term = -term * h2 / (static_cast<Real>(m) * static_cast<Real>(m - 1));
    sum += term;
    const Real a = term < 0 ? -term : term;
    const Real s = sum < 0 ? -sum : sum;
    if (m > half && a <= static_cast<Real>(1e-17) * s)
      break;
  }
  return sum;
}

void check_range(double x) {
  if (!(std::abs(x) <= kMaxArg))
    throw InputError("Bessel series is only used for |x| <= 50");
}

} // namespace

double bessel_j0(double x) {
  check_range(x);
  const double half = 0.5 * std::abs(x);
  if (std::abs(x) <= 12.0)
    return sum_j0<double>(half);
  return static_cast<double>(sum_j0<Wide>(static_cast<Wide>(half)));
}

double bessel_j0_prime(double x) {
  check_range(x);
  const double sign = x < 0.0 ? -1.0 : 1.0; // J_0' is odd
  const double half = 0.5 * std::abs(x);
  if (std::abs(x) <= 12.0)
    return sign * sum_j0_prime<double>(half);
  return sign * static_cast<double>(sum_j0_prime<Wide>(static_cast<Wide>(half)));
}

namespace {

template <typename F>
std::vector<double> positive_zeros(F f, int count) {
  if (count < 0)
    throw InputError("zero count must be non-negative");
  std::vector<double> zeros;
  constexpr double step = 0.1;
  double a = step;
  double fa = f(a);
  while (static_cast<int>(zeros.size()) < count) {
    const double b = a + step;
    if (b > kMaxArg)
      throw NumericalError("requested Bessel zero lies beyond the series range");
    const double fb = f(b);
    if ((fa < 0.0) != (fb < 0.0)) {
      double lo = a, hi = b, flo = fa;
      while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm < 0.0) == (flo < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      zeros.push_back(0.5 * (lo + hi));
    }
    a = b;
    fa = fb;
  }
  return zeros;
}

} // namespace

std::vector<double> j0_zeros(int count) { return positive_zeros(bessel_j0, count); }

std::vector<double> j0_prime_zeros(int count) { return positive_zeros(bessel_j0_prime, count); }

AFConstant xi_k(int k) {
  if (k < 1 || k > 20)
    throw InputError("xi_k is defined here for 1 <= k <= 20");
  AFConstant c;
  c.k = k;
  c.xi = k % 2 == 1 ? j0_zeros((k + 1) / 2).back() : j0_prime_zeros(k / 2).back();
  c.bound = 0.5 * c.xi * c.xi;
  return c;
}

} // namespace specbound::specfun
