#include <benchmark/benchmark.h>

#include "cuspforge/criteria.hpp"

using namespace cuspforge;

static void BM_SurveyX1(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(survey_x1(state.range(0), 1));
}
BENCHMARK(BM_SurveyX1)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

static void BM_VerdictX1(benchmark::State& state) {
  const Level level(72);
  for (auto _ : state) benchmark::DoNotOptimize(x1_verdict(level, 6));
}
BENCHMARK(BM_VerdictX1);

BENCHMARK_MAIN();
