#include <benchmark/benchmark.h>

#include "swell/specfun.hpp"

namespace {

void BM_SphBesselJ(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  const double x = 0.75 * l + 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(swell::specfun::sph_bessel_j(l, x));
  }
}
BENCHMARK(BM_SphBesselJ)->RangeMultiplier(8)->Range(1, 4096);

// One sweep of all orders, the inner loop of the total-density sum.
void BM_SphBesselJAll(benchmark::State& state) {
  const int l_max = static_cast<int>(state.range(0));
  const swell::specfun::BesselOrderRange range(l_max, 0.5 * l_max + 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(swell::specfun::sph_bessel_j_all(range));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SphBesselJAll)->RangeMultiplier(4)->Range(4, 4096)->Complexity();

void BM_SphBesselZero(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(swell::specfun::sph_bessel_zero(l, 3));
  }
}
BENCHMARK(BM_SphBesselZero)->Arg(0)->Arg(10)->Arg(100);

}  // namespace
