// Microbenchmarks for the hot paths: single spectral evaluations, grid
// sweeps, pole solves, and the quadrature-based cross sections. Build-only
// target; run manually, e.g.
//
//   ./build/benchmarks/polarikit_bench --benchmark_min_time=0.2

#include <benchmark/benchmark.h>

#include <complex>
#include <vector>

#include "polarikit/polarikit.hpp"

using namespace polarikit;

namespace {

ModelParams dense(EpsilonMode mode = EpsilonMode::full) {
  ModelParams p;
  p.n_dimless = 0.05;
  p.epsilon_mode = mode;
  return p;
}

void BM_permittivity(benchmark::State& state) {
  const ModelParams p = dense();
  double delta = -10.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(permittivity(delta, p));
    delta = delta < 10.0 ? delta + 1e-3 : -10.0;
  }
}
BENCHMARK(BM_permittivity);

void BM_transverse_eval_full(benchmark::State& state) {
  const ModelParams p = dense();
  double delta = -10.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(g_transverse(delta, 0.3, p));
    delta = delta < 10.0 ? delta + 1e-3 : -10.0;
  }
}
BENCHMARK(BM_transverse_eval_full);

void BM_transverse_eval_unity(benchmark::State& state) {
  const ModelParams p = dense(EpsilonMode::unity);
  double delta = -10.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(g_transverse(delta, 0.3, p));
    delta = delta < 10.0 ? delta + 1e-3 : -10.0;
  }
}
BENCHMARK(BM_transverse_eval_unity);

void BM_longitudinal_eval(benchmark::State& state) {
  const ModelParams p = dense();
  double delta = -10.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(g_longitudinal(delta, 0.3, p));
    delta = delta < 10.0 ? delta + 1e-3 : -10.0;
  }
}
BENCHMARK(BM_longitudinal_eval);

void BM_green_tensor(benchmark::State& state) {
  const ModelParams p = dense();
  const Vec3 khat{0.0, 0.0, 1.0};
  double delta = -10.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(green_tensor(khat, delta, 0.3, p));
    delta = delta < 10.0 ? delta + 1e-3 : -10.0;
  }
}
BENCHMARK(BM_green_tensor);

void BM_sweep_surface(benchmark::State& state) {
  const ModelParams p = dense();
  const int n = static_cast<int>(state.range(0));
  std::vector<double> kappa(n), delta(n);
  for (int i = 0; i < n; ++i) {
    kappa[i] = -10.0 + 20.0 * i / (n - 1);
    delta[i] = -10.0 + 20.0 * i / (n - 1);
  }
  SweepOptions options;
  options.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sweep_surface(Component::transverse, kappa, delta, p, options));
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_sweep_surface)->Arg(50)->Arg(200);

void BM_find_pole(benchmark::State& state) {
  const ModelParams p = dense(EpsilonMode::unity);
  const std::complex<double> seed{0.0, -0.5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_pole(Component::transverse, 0.3, seed, p));
  }
}
BENCHMARK(BM_find_pole);

void BM_trace_dispersion(benchmark::State& state) {
  const ModelParams p = dense(EpsilonMode::unity);
  const std::complex<double> seed{
      p.recoil_ratio, -0.5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(trace_dispersion(Component::longitudinal, -5.0,
                                              5.0, 0.1, seed, p));
  }
}
BENCHMARK(BM_trace_dispersion);

void BM_form_factor(benchmark::State& state) {
  const CondensateProfile cloud = CondensateProfile::thomas_fermi(1e5, 40.0);
  double q = 0.05;
  for (auto _ : state) {
    benchmark::DoNotOptimize(form_factor(cloud, q));
    q = q < 2.0 ? q + 0.01 : 0.05;
  }
}
BENCHMARK(BM_form_factor);

void BM_extinction(benchmark::State& state) {
  const ModelParams p = dense();
  double delta = -10.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(extinction_cross_section(delta, p));
    delta = delta < 10.0 ? delta + 1e-3 : -10.0;
  }
}
BENCHMARK(BM_extinction);

void BM_integrated_elastic(benchmark::State& state) {
  const ModelParams p = dense();
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrated_elastic(0.0, p));
  }
}
BENCHMARK(BM_integrated_elastic);

}  // namespace

BENCHMARK_MAIN();
