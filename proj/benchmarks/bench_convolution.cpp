#include <benchmark/benchmark.h>

#include "mconv/convolution.hpp"

using namespace mconv;

static void BM_LStarL(benchmark::State& state) {
  const Field Q = Field::rational();
  const auto l = MonodromyTuple::rank_one_ints(Q, {-1, -1, 1}, Points{-1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(middle_convolution(ConvolutionInput(l, l)));
}
BENCHMARK(BM_LStarL);

static void BM_McLambda(benchmark::State& state) {
  const auto demo = sl_demo(3, static_cast<int>(state.range(0)), 1);
  const Field K = demo.field;
  const Scalar i = Scalar::generator(K).pow(3);
  for (auto _ : state) benchmark::DoNotOptimize(mc_lambda(demo.result, -i));
}
BENCHMARK(BM_McLambda)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_SlDemo(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sl_demo(3, static_cast<int>(state.range(0)), 1));
}
BENCHMARK(BM_SlDemo)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
