#include <benchmark/benchmark.h>

#include "plasmon/secular.hpp"
#include "plasmon/specfun.hpp"

using plasmon::cdouble;

static void BM_LogDerivI(benchmark::State& state) {
  const int m = int(state.range(0));
  const cdouble w{25.0, -0.2};
  for (auto _ : state)
    benchmark::DoNotOptimize(plasmon::specfun::log_deriv_I(m, w));
}
BENCHMARK(BM_LogDerivI)->Arg(0)->Arg(16)->Arg(48);

static void BM_LogDerivH1(benchmark::State& state) {
  const int m = int(state.range(0));
  const cdouble w{25.0, -0.2};
  for (auto _ : state)
    benchmark::DoNotOptimize(plasmon::specfun::log_deriv_H1(m, w));
}
BENCHMARK(BM_LogDerivH1)->Arg(0)->Arg(16)->Arg(48);

static void BM_EvalLogFhat(benchmark::State& state) {
  plasmon::secular::SecularContext ctx(int(state.range(0)), 3.0);
  const cdouble lam{13.1, -0.01};
  for (auto _ : state)
    benchmark::DoNotOptimize(plasmon::secular::eval_logFhat(ctx, lam));
}
BENCHMARK(BM_EvalLogFhat)->Arg(8)->Arg(16)->Arg(32);

static void BM_ScaledRatioI(benchmark::State& state) {
  const cdouble w2{22.6, -0.015};
  const cdouble w1 = 0.6 * w2;
  for (auto _ : state)
    benchmark::DoNotOptimize(plasmon::specfun::scaled_ratio_I(16, w1, w2));
}
BENCHMARK(BM_ScaledRatioI);

BENCHMARK_MAIN();
