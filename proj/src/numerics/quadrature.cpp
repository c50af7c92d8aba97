#include "specbound/numerics/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "specbound/errors.hpp"

namespace specbound::numerics {

GaussRule gauss_legendre(int npts) {
  if (npts < 1)
    throw InputError("gauss_legendre: npts must be >= 1");
  GaussRule rule;
  rule.nodes.assign(npts, 0.0);
  rule.weights.assign(npts, 0.0);
  const int half = (npts + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi initial guess for the i-th largest root, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (npts + 0.5));
    double dp = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= npts; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = npts * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-16)
        break;
    }
    // Re-evaluate the derivative at the converged root for the weight.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= npts; ++k) {
      const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = pk;
    }
    dp = npts * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[npts - 1 - i] = x;
    rule.nodes[i] = -x;
    rule.weights[npts - 1 - i] = w;
    rule.weights[i] = w;
  }
  if (npts % 2 == 1)
    rule.nodes[npts / 2] = 0.0;
  return rule;
}

double integrate_fixed(const std::function<double(double)>& f, double a, double b,
                       const GaussRule& rule) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return acc * half;
}

namespace {

void check_setting(const QuadratureSetting& s) {
  if (s.start_points < 1 || s.max_points < s.start_points || !(s.rel_tol > 0.0))
    throw InputError("quadrature setting: need 1 <= start_points <= max_points, rel_tol > 0");
}

} // namespace

QuadratureResult integrate_escalating(const std::function<double(double)>& f, double a,
                                      double b, const QuadratureSetting& setting) {
  QuadratureResult r;
  std::vector<double> change;
  const auto v = integrate_escalating_vec(
      [&](double x, std::span<double> out) { out[0] = f(x); }, 1, a, b, setting, &r.points,
      &change);
  r.value = v[0];
  r.change = change[0];
  return r;
}

std::vector<double> integrate_escalating_vec(
    const std::function<void(double, std::span<double>)>& f, std::size_t components,
    double a, double b, const QuadratureSetting& setting, int* points_used,
    std::vector<double>* change) {
  check_setting(setting);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::vector<double> buf(components);

  auto estimate = [&](int n, std::vector<double>& value, std::vector<double>& mass) {
    const GaussRule rule = gauss_legendre(n);
    value.assign(components, 0.0);
    mass.assign(components, 0.0);
    for (int i = 0; i < n; ++i) {
      f(mid + half * rule.nodes[i], buf);
      for (std::size_t c = 0; c < components; ++c) {
        value[c] += rule.weights[i] * buf[c];
        mass[c] += rule.weights[i] * std::abs(buf[c]);
      }
    }
    for (std::size_t c = 0; c < components; ++c) {
      value[c] *= half;
      mass[c] *= std::abs(half);
    }
  };

  int n = setting.start_points;
  std::vector<double> prev;
  std::vector<double> prev_mass;
  estimate(n, prev, prev_mass);
  while (true) {
    const int next = 2 * n;
    if (next > setting.max_points)
      throw NumericalError("quadrature did not converge within " +
                           std::to_string(setting.max_points) + " points");
    std::vector<double> cur;
    std::vector<double> mass;
    estimate(next, cur, mass);
    bool ok = true;
    for (std::size_t c = 0; c < components && ok; ++c)
      ok = std::abs(cur[c] - prev[c]) <= setting.rel_tol * mass[c];
    n = next;
    if (ok) {
      if (points_used)
        *points_used = n;
      if (change) {
        change->resize(components);
        for (std::size_t c = 0; c < components; ++c)
          (*change)[c] = std::abs(cur[c] - prev[c]);
      }
      return cur;
    }
    prev = std::move(cur);
  }
}

double integrate_triangle(const std::function<double(double, double)>& f, const Point2& a,
                          const Point2& b, const Point2& c, const GaussRule& rule) {
  // x(u, v) = a + u ((b - a) + v (c - b)), u, v in [0, 1]; Jacobian u |det|.
  const double e1x = b[0] - a[0], e1y = b[1] - a[1];
  const double e2x = c[0] - b[0], e2y = c[1] - b[1];
  const double det = std::abs(e1x * e2y - e1y * e2x);
  double acc = 0.0;
  const std::size_t n = rule.nodes.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double u = 0.5 * (rule.nodes[i] + 1.0);
    const double wu = 0.5 * rule.weights[i];
    double inner = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double v = 0.5 * (rule.nodes[j] + 1.0);
      const double wv = 0.5 * rule.weights[j];
      const double x = a[0] + u * (e1x + v * e2x);
      const double y = a[1] + u * (e1y + v * e2y);
      inner += wv * f(x, y);
    }
    acc += wu * u * inner;
  }
  return acc * det;
}

} // namespace specbound::numerics
