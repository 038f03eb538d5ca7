#include <benchmark/benchmark.h>

#include "mconv/k3count.hpp"

using namespace mconv;

static void BM_CountAffine(benchmark::State& state) {
  const auto q = state.range(0);
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(count_affine(q, 1, threads));
}
BENCHMARK(BM_CountAffine)
    ->Args({29, 1})
    ->Args({841, 1})
    ->Args({841, 4})
    ->Args({3721, 4})
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
