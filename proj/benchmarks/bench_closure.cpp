#include <benchmark/benchmark.h>

#include "mconv/modgroup.hpp"

using namespace mconv;

static std::vector<Matrix> generators(std::int64_t ell) {
  const Field Q = Field::rational();
  const MonodromyTuple v({Matrix::from_ints(Q, {{-1, -4, 4}, {0, 1, 0}, {0, 0, 1}}),
                          Matrix::from_ints(Q, {{1, 0, 0}, {-2, -1, 2}, {0, 0, 1}}),
                          Matrix::from_ints(Q, {{1, 0, 0}, {0, 1, 0}, {4, 4, -1}}),
                          Matrix::from_ints(Q, {{-1, -4, 4}, {2, 7, -6}, {4, 12, -9}})});
  auto gens = reduce_mod(v, ell).entries();
  gens.pop_back();
  return gens;
}

static void BM_Closure(benchmark::State& state) {
  const auto gens = generators(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(group_closure(gens, 1000000));
}
BENCHMARK(BM_Closure)->Arg(5)->Arg(13)->Arg(29)->Arg(53)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
