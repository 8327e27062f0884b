#include <benchmark/benchmark.h>

#include "swell/classical.hpp"
#include "swell/quantum.hpp"

namespace {

void BM_TotalRadialDensity(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto grid = swell::numerics::RadialGrid::uniform(1000, 0.99);
  for (auto _ : state) {
    auto curve = swell::quantum::total_radial_density(n, grid);
    benchmark::DoNotOptimize(curve.values().data());
  }
}
BENCHMARK(BM_TotalRadialDensity)->Arg(1)->Arg(10)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_MonteCarloHistogram(benchmark::State& state) {
  swell::classical::McConfig config;
  config.samples = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto hist = swell::classical::mc_histogram(config);
    benchmark::DoNotOptimize(hist.counts.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarloHistogram)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

void BM_ClassicalByQuadrature(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(swell::classical::classical_total_density_by_quadrature(0.9, 1e-10));
  }
}
BENCHMARK(BM_ClassicalByQuadrature);

}  // namespace
