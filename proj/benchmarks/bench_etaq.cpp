#include <benchmark/benchmark.h>

#include "cuspforge/etaq.hpp"

using namespace cuspforge;

static void BM_EtaSeries(benchmark::State& state) {
  const Level level(20);
  for (auto _ : state) benchmark::DoNotOptimize(eta_series(level, 1, state.range(0)));
}
BENCHMARK(BM_EtaSeries)->Arg(50)->Arg(200);

static void BM_QuotientSeriesF(benchmark::State& state) {
  const auto f = x1_20_function_f();
  for (auto _ : state) benchmark::DoNotOptimize(quotient_series(f, state.range(0)));
}
BENCHMARK(BM_QuotientSeriesF)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_CertifyX120(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(certify_x1_20());
}
BENCHMARK(BM_CertifyX120)->Unit(benchmark::kMillisecond);
