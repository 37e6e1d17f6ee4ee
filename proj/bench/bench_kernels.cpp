// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "oddperm/classes.hpp"
#include "oddperm/duality.hpp"

namespace {

void BM_ClassesSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oddperm::classes_of_sn_serial(n));
}

void BM_ClassesParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(oddperm::classes_of_sn(n, {.allow_large = false, .jobs = jobs}));
}

void BM_CensusSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oddperm::run_census_serial(n));
}

void BM_CensusParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(oddperm::run_census(n, {.allow_long = false, .jobs = jobs}));
}

}  // namespace

BENCHMARK(BM_ClassesSerial)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassesParallel)->ArgsProduct({{7, 8}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CensusSerial)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->ArgsProduct({{7, 8}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
