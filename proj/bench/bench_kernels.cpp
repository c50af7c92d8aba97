// Serial reference vs OpenMP path for each parallel kernel.
// Run with OMP_NUM_THREADS set to compare thread counts.

#include <benchmark/benchmark.h>

#include <cmath>

#include "specbound/cohom1/checks.hpp"
#include "specbound/cohom1/profile.hpp"
#include "specbound/numerics/polynomial2.hpp"
#include "specbound/numerics/sturm_liouville.hpp"
#include "specbound/numerics/tridiag.hpp"
#include "specbound/toric/bound.hpp"
#include "specbound/toric/polytope.hpp"
#include "specbound/toric/potential.hpp"

using namespace specbound;

namespace {

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

// Guillemin coefficient on [-1, 1], shifted to [0, 2].
double guillemin_coeff(double x) { return x * (2.0 - x); }

void BM_assemble_sturm_liouville(benchmark::State& state) {
  const int mesh = static_cast<int>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        numerics::assemble_sturm_liouville(guillemin_coeff, 2.0, mesh,
                                           numerics::RightBoundary::natural, exec_of(state)));
}

void BM_tridiag_eigs(benchmark::State& state) {
  const auto t = numerics::assemble_sturm_liouville(guillemin_coeff, 2.0,
                                                    static_cast<int>(state.range(1)));
  for (auto _ : state)
    benchmark::DoNotOptimize(numerics::tridiag_eigs(t, 0, 12, exec_of(state)));
}

void BM_sample_scalar_curvature(benchmark::State& state) {
  numerics::Polynomial2 pert;
  pert.set(2, 2, 0.1);
  pert.set(3, 0, 0.02);
  const toric::SymplecticPotential u(
      toric::polytope_from_vertices(2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}}), pert);
  const int npts = static_cast<int>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(toric::sample_scalar_curvature(u, npts, exec_of(state)));
}

void BM_check_lemma3(benchmark::State& state) {
  const auto p = cohom1::Profile::polynomial(
      3, numerics::Polynomial{1.0} + numerics::Polynomial{0.0, 1.0, -1.0} * numerics::Polynomial{0.4});
  const int grid = static_cast<int>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(cohom1::check_lemma3(p, grid, exec_of(state)));
}

void BM_direction_sweep(benchmark::State& state) {
  const auto P = toric::polytope_from_vertices(2, {{0, 0}, {2, 0}, {1, 1}, {0, 1}});
  for (auto _ : state)
    benchmark::DoNotOptimize(toric::direction_sweep(P, static_cast<int>(state.range(1)), 32,
                                                    exec_of(state)));
}

} // namespace

// First argument: 0 = serial reference, 1 = OpenMP.
BENCHMARK(BM_assemble_sturm_liouville)->ArgsProduct({{0, 1}, {4000, 64000}});
BENCHMARK(BM_tridiag_eigs)->ArgsProduct({{0, 1}, {4000, 16000}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sample_scalar_curvature)->ArgsProduct({{0, 1}, {100, 400}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_check_lemma3)->ArgsProduct({{0, 1}, {1000, 100000}});
BENCHMARK(BM_direction_sweep)->ArgsProduct({{0, 1}, {2, 4}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
