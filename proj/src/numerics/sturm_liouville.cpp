#include "specbound/numerics/sturm_liouville.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "specbound/errors.hpp"

namespace specbound::numerics {

namespace {

// Midpoint coefficient samples p((i + 1/2) h), i = 0 .. mesh-1.
std::vector<double> sample_midpoints(const std::function<double(double)>& p, double h,
                                     int mesh, Exec exec) {
  std::vector<double> pm(mesh);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < mesh; ++i)
      pm[i] = p((i + 0.5) * h);
  } else {
    for (int i = 0; i < mesh; ++i)
      pm[i] = p((i + 0.5) * h);
  }
  for (int i = 0; i < mesh; ++i)
    if (!(pm[i] >= 0.0))
      throw InputError("Sturm-Liouville coefficient is negative or undefined at x = " +
                       std::to_string((i + 0.5) * h));
  return pm;
}

} // namespace

TridiagEig assemble_sturm_liouville(const std::function<double(double)>& p, double length,
                                    int mesh, RightBoundary right, Exec exec) {
  if (mesh < 16)
    throw InputError("Sturm-Liouville mesh must be at least 16 cells");
  if (!(length > 0.0))
    throw InputError("Sturm-Liouville interval length must be positive");
  const double h = length / mesh;
  const std::vector<double> pm = sample_midpoints(p, h, mesh, exec);

  // Unknowns at nodes 0..mesh (natural) or 0..mesh-1 (Dirichlet at the right).
  const int nodes = right == RightBoundary::natural ? mesh + 1 : mesh;
  TridiagEig t;
  t.diag.assign(nodes, 0.0);
  t.offdiag.assign(nodes - 1, 0.0);
  auto volume = [&](int i) { return (i == 0 || i == mesh) ? 0.5 * h : h; };

  auto fill = [&](int i) {
    double k = 0.0;
    if (i > 0)
      k += pm[i - 1];
    if (i < mesh)
      k += pm[i];
    t.diag[i] = k / (h * volume(i));
    if (i + 1 < nodes)
      t.offdiag[i] = -pm[i] / (h * std::sqrt(volume(i) * volume(i + 1)));
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < nodes; ++i)
      fill(i);
  } else {
    for (int i = 0; i < nodes; ++i)
      fill(i);
  }
  return t;
}

std::vector<double> sl_eigs(const std::function<double(double)>& p, double length, int mesh,
                            int count, RightBoundary right, Exec exec) {
  if (count < 1)
    throw InputError("sl_eigs: count must be >= 1");
  const TridiagEig t = assemble_sturm_liouville(p, length, mesh, right, exec);
  const int order = static_cast<int>(t.diag.size());
  const int want = std::min(order, count + 1);
  if (count > order)
    throw InputError("sl_eigs: more eigenvalues requested than mesh nodes");
  std::vector<double> ev = tridiag_eigs(t, 0, want, exec);
  if (want >= 2 && std::abs(ev[0]) < kZeroModeThreshold * std::abs(ev[1]))
    ev[0] = 0.0;
  ev.resize(count);
  return ev;
}

SpectrumResult sl_spectrum(const std::function<double(double)>& p, double length, int count,
                           const SpectrumOptions& opts, Exec exec) {
  if (count < 1)
    throw InputError("spectrum: count must be >= 1");
  int mesh = opts.mesh;
  if (mesh < 32)
    throw InputError("spectrum: mesh must be at least 32 (the comparison solve uses mesh/2)");
  std::vector<double> coarse = sl_eigs(p, length, mesh / 2, count + 1, RightBoundary::natural, exec);
  while (true) {
    std::vector<double> fine = sl_eigs(p, length, mesh, count + 1, RightBoundary::natural, exec);
    double change = 0.0;
    for (int k = 1; k <= count; ++k)
      change = std::max(change, std::abs(fine[k] - coarse[k]) / std::abs(fine[k]));
    const bool done = !opts.refine || change < opts.refine_tol || 2 * mesh > opts.max_mesh;
    if (done) {
      SpectrumResult r;
      r.eigenvalues = std::move(fine);
      r.mesh = mesh;
      r.coarse_mesh = mesh / 2;
      r.relative_change = change;
      return r;
    }
    coarse = std::move(fine);
    mesh *= 2;
  }
}

} // namespace specbound::numerics
