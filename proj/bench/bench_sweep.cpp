#include <benchmark/benchmark.h>

#include "fxmpc/verify.hpp"

using namespace fx;

namespace {

void BM_SweepParallel(benchmark::State& state) {
  const MathFn f = static_cast<MathFn>(state.range(0));
  auto [sx, sy] = default_pair(f);
  for (auto _ : state) benchmark::DoNotOptimize(ulp_sweep(f, sx, sy));
  state.SetLabel(fn_name(f));
}

void BM_SweepSerial(benchmark::State& state) {
  const MathFn f = static_cast<MathFn>(state.range(0));
  auto [sx, sy] = default_pair(f);
  for (auto _ : state) benchmark::DoNotOptimize(ulp_sweep_serial(f, sx, sy));
  state.SetLabel(fn_name(f));
}

void BM_SecureBatch(benchmark::State& state) {
  const MathFn f = static_cast<MathFn>(state.range(0));
  auto [sx, sy] = default_pair(f);
  const MathParams p = default_params(f, sx, sy);
  for (auto _ : state) {
    BenchResult r = bench_inproc(f, p, static_cast<size_t>(state.range(1)), 1);
    state.counters["KB/inst"] = r.kb_per_instance();
  }
  state.SetLabel(fn_name(f));
}

}  // namespace

BENCHMARK(BM_SweepParallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SecureBatch)->ArgsProduct({{0, 1, 2, 3}, {1000}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
