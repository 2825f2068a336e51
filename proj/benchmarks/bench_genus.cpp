#include <benchmark/benchmark.h>

#include "cuspforge/genus.hpp"

using namespace cuspforge;

static void BM_G1(benchmark::State& state) {
  const Level level(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(g1(level));
}
BENCHMARK(BM_G1)->Arg(20)->Arg(300)->Arg(1500);

static void BM_G0(benchmark::State& state) {
  const Level level(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(g0(level));
}
BENCHMARK(BM_G0)->Arg(20)->Arg(300)->Arg(1500);

static void BM_GenusDeltaD(benchmark::State& state) {
  const Level level(state.range(0));
  const auto delta = delta_d(level, 2);
  for (auto _ : state) benchmark::DoNotOptimize(genus_delta(level, delta));
}
BENCHMARK(BM_GenusDeltaD)->Arg(20)->Arg(240);
