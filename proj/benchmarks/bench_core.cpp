#include <benchmark/benchmark.h>

static void BM_noop(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(0);
}
BENCHMARK(BM_noop);
BENCHMARK_MAIN();
