#include <benchmark/benchmark.h>

#include "cuspforge/cusps.hpp"
#include "cuspforge/symmetry.hpp"

using namespace cuspforge;

static void BM_AtlasGamma1(benchmark::State& state) {
  const Level level(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(atlas(GroupTag::gamma1(level)));
}
BENCHMARK(BM_AtlasGamma1)->Arg(20)->Arg(100)->Arg(300);

static void BM_AtlasGamma0(benchmark::State& state) {
  const Level level(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(atlas(GroupTag::gamma0(level)));
}
BENCHMARK(BM_AtlasGamma0)->Arg(20)->Arg(100)->Arg(300);

static void BM_OrbitsX1(benchmark::State& state) {
  const Level level(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cusp_orbits_x1(level));
}
BENCHMARK(BM_OrbitsX1)->Arg(20)->Arg(72)->Arg(100);
