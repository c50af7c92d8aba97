#include "specbound/numerics/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "specbound/errors.hpp"

namespace specbound::numerics {

int sturm_count(const TridiagEig& t, double x) {
  const std::size_t n = t.diag.size();
  constexpr double tiny = std::numeric_limits<double>::min() * 1e10;
  int count = 0;
  double d = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double b2 = i == 0 ? 0.0 : t.offdiag[i - 1] * t.offdiag[i - 1];
    d = (t.diag[i] - x) - (i == 0 ? 0.0 : b2 / d);
    if (d == 0.0)
      d = -tiny;
    if (d < 0.0)
      ++count;
  }
  return count;
}

namespace {

struct Bracket {
  double lo;
  double hi;
};

Bracket gershgorin(const TridiagEig& t) {
  const std::size_t n = t.diag.size();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0)
      r += std::abs(t.offdiag[i - 1]);
    if (i + 1 < n)
      r += std::abs(t.offdiag[i]);
    lo = std::min(lo, t.diag[i] - r);
    hi = std::max(hi, t.diag[i] + r);
  }
  return {lo, hi};
}

double bisect_index(const TridiagEig& t, int index, Bracket b) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double abs_floor = eps * std::max(std::abs(b.lo), std::abs(b.hi));
  double lo = b.lo;
  double hi = b.hi;
  for (int iter = 0; iter < 256; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= 2.0 * eps * std::max(std::abs(lo), std::abs(hi)) + abs_floor)
      break;
    if (sturm_count(t, mid) > index)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

} // namespace

std::vector<double> tridiag_eigs(const TridiagEig& t, int first, int count, Exec exec) {
  const int n = static_cast<int>(t.diag.size());
  if (n == 0 || static_cast<int>(t.offdiag.size()) != n - 1)
    throw InputError("tridiag_eigs: off-diagonal must be one shorter than the diagonal");
  if (first < 0 || count < 0 || first + count > n)
    throw InputError("tridiag_eigs: requested index range exceeds the operator order");
  const Bracket b = gershgorin(t);
  std::vector<double> out(count);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i)
      out[i] = bisect_index(t, first + i, b);
  } else {
    for (int i = 0; i < count; ++i)
      out[i] = bisect_index(t, first + i, b);
  }
  return out;
}

} // namespace specbound::numerics
