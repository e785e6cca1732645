#include <benchmark/benchmark.h>

#include "th/model.hpp"
#include "th/oracle.hpp"
#include "th/spectrum.hpp"

using namespace th;

namespace {
const model::MoleculeParams kDeepI{"deep-I", 40000.0, 1.0, 2.0, 0.3, 1.0};
const model::MoleculeParams kIII{"III", 20000.0, 1.0, 2.0, 0.05, 1.0};
}  // namespace

static void BM_closed_form_spectrum(benchmark::State& state) {
  spectrum::SolveOptions opts;
  opts.count_check = false;
  for (auto _ : state)
    benchmark::DoNotOptimize(spectrum::energy_closed_case_i(kDeepI, opts));
}
BENCHMARK(BM_closed_form_spectrum);

static void BM_transcend_value(benchmark::State& state) {
  double E = 5000.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectrum::transcend_value_case_iii(kIII, E));
    E = E < 19000.0 ? E + 13.0 : 5000.0;
  }
}
BENCHMARK(BM_transcend_value);

static void BM_transcend_solve(benchmark::State& state) {
  spectrum::SolveOptions opts;
  opts.count_check = false;
  for (auto _ : state)
    benchmark::DoNotOptimize(spectrum::energy_roots_case_iii(kIII, opts));
}
BENCHMARK(BM_transcend_solve)->Unit(benchmark::kMillisecond);

static void BM_wavefunction_case_i(benchmark::State& state) {
  double r = 0.6;
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectrum::wavefunction_case_i(kDeepI, 5, r));
    r = r < 8.0 ? r + 0.01 : 0.6;
  }
}
BENCHMARK(BM_wavefunction_case_i);

static void BM_numerov_sweep(benchmark::State& state) {
  auto grid = oracle::make_grid(model::classify_regime(kIII), kIII,
                                static_cast<int>(state.range(0)));
  auto V = [&](double r) { return model::potential_th(kIII, r); };
  double conv = model::scale(kIII).conv;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        oracle::numerov_count_below(V, grid, conv, kIII.D * 0.99));
}
BENCHMARK(BM_numerov_sweep)->Arg(20000)->Arg(80000)->Unit(benchmark::kMillisecond);

static void BM_numerov_eigen_full(benchmark::State& state) {
  auto grid = oracle::make_grid(model::classify_regime(kIII), kIII, 20000);
  auto V = [&](double r) { return model::potential_th(kIII, r); };
  double conv = model::scale(kIII).conv;
  for (auto _ : state)
    benchmark::DoNotOptimize(oracle::numerov_eigen(V, grid, conv, 64));
}
BENCHMARK(BM_numerov_eigen_full)->Unit(benchmark::kMillisecond);
