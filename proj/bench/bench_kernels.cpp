// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "oddgirth/gamma5prime.hpp"
#include "oddgirth/scan.hpp"

namespace {

void BM_ScanEnumerationSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oddgirth::scan_enumeration_serial(n, 5));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (n * (n - 1) / 2)));
}

void BM_ScanEnumerationParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(oddgirth::scan_enumeration_parallel(n, 5, jobs));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (n * (n - 1) / 2)));
}

void BM_PowerSumSerial(benchmark::State& state) {
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oddgirth::power_sum_max_bruteforce_serial(4, 2.25, 1.5, steps));
}

void BM_PowerSumParallel(benchmark::State& state) {
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oddgirth::power_sum_max_bruteforce(4, 2.25, 1.5, steps));
}

}  // namespace

BENCHMARK(BM_ScanEnumerationSerial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanEnumerationParallel)->Args({6, 2})->Args({7, 2})->Args({7, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PowerSumSerial)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PowerSumParallel)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
