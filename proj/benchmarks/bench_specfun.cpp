#include <benchmark/benchmark.h>

#include "th/specfun.hpp"

using namespace th::specfun;

static void BM_ln_gamma(benchmark::State& state) {
  double x = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ln_gamma(x));
    x = x < 9000.0 ? x * 1.01 : 0.3;
  }
}
BENCHMARK(BM_ln_gamma);

static void BM_gauss_2f1_small_params(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(gauss_2f1(1.3, 2.7, 3.9, 0.45));
}
BENCHMARK(BM_gauss_2f1_small_params);

// The parameter scale of the transcendental quantization condition.
static void BM_gauss_2f1_quantization_scale(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(gauss_2f1(-10.6, 677.6, 11.66, 0.3695));
}
BENCHMARK(BM_gauss_2f1_quantization_scale);

static void BM_gauss_2f1_connection(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(gauss_2f1(-6.3, 40.0, 9.5, 1.0 - 1e-6));
}
BENCHMARK(BM_gauss_2f1_connection);

static void BM_kummer_1f1(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(kummer_1f1(2.3, 5.9, 120.0));
}
BENCHMARK(BM_kummer_1f1);

static void BM_jacobi_p(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(jacobi_p(20, 4.3, 2.1, 0.37));
}
BENCHMARK(BM_jacobi_p);

BENCHMARK_MAIN();
