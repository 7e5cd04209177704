#include <benchmark/benchmark.h>

#include <numbers>

#include "polyspec/bessel.hpp"
#include "polyspec/spectrum.hpp"
#include "polyspec/zeros.hpp"

namespace {

void BM_BesselSeries(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  double z = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(polyspec::bessel_j(m, z));
    z = z < 1.9 ? z + 0.01 : 0.1;
  }
}
BENCHMARK(BM_BesselSeries)->Arg(0)->Arg(10)->Arg(100);

void BM_BesselRecurrence(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const double z = static_cast<double>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(polyspec::bessel_j(m, z));
}
BENCHMARK(BM_BesselRecurrence)->Args({0, 10})->Args({5, 50})->Args({50, 200})->Args({150, 500});

void BM_ZeroTable(benchmark::State& state) {
  const int orders = static_cast<int>(state.range(0));
  for (auto _ : state) {
    polyspec::ZeroCache cache;
    for (int m = 0; m <= orders; ++m) benchmark::DoNotOptimize(cache.zero(m, 20));
  }
}
BENCHMARK(BM_ZeroTable)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_EnumerateModes(benchmark::State& state) {
  const double lambda_max = static_cast<double>(state.range(0));
  polyspec::ZeroCache cache;
  const polyspec::Polydisc P({1.0, std::numbers::sqrt2, 1.7});
  polyspec::enumerate_modes(P, 1, lambda_max, cache);  // warm the zero cache
  std::size_t count = 0;
  for (auto _ : state) {
    count = polyspec::enumerate_modes(P, 1, lambda_max, cache).size();
    benchmark::DoNotOptimize(count);
  }
  state.counters["modes"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumerateModes)->Arg(20)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
