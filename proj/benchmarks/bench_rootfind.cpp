#include <benchmark/benchmark.h>

#include "plasmon/rootfind.hpp"
#include "plasmon/secular.hpp"

using plasmon::cdouble;
using plasmon::rootfind::Rect;

static void BM_WindingCount(benchmark::State& state) {
  plasmon::secular::SecularContext ctx(16, 3.0);
  auto f = [ctx](cdouble z) { return plasmon::secular::eval_logFhat(ctx, z); };
  const Rect rect{12.0, 13.0, -0.2, -1e-9};
  for (auto _ : state)
    benchmark::DoNotOptimize(plasmon::rootfind::winding_count(f, rect));
}
BENCHMARK(BM_WindingCount);

static void BM_LocalizeMode(benchmark::State& state) {
  plasmon::secular::SecularContext ctx(16, 3.0);
  auto f = [ctx](cdouble z) { return plasmon::secular::eval_logFhat(ctx, z); };
  auto fd = [ctx](cdouble z) {
    return plasmon::secular::eval_logF_deriv(ctx, z);
  };
  const Rect rect{12.0, 13.0, -0.2, -1e-9};
  for (auto _ : state)
    benchmark::DoNotOptimize(plasmon::rootfind::localize(f, fd, rect));
}
BENCHMARK(BM_LocalizeMode);
