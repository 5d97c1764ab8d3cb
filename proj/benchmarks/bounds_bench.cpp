#include <benchmark/benchmark.h>

#include "intertwine/facts_io.hpp"
#include "verify.hpp"

using namespace intertwine;

static void BM_PropagateClassicalPack(benchmark::State& state) {
  for (auto _ : state) {
    FactBase base;
    load_facts(base, std::string(INTERTWINE_BENCH_DATA_DIR) + "/facts/classical.facts");
    benchmark::DoNotOptimize(base.propagate());
  }
}
BENCHMARK(BM_PropagateClassicalPack)->Unit(benchmark::kMillisecond);

static void BM_ReproductionBase(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify::reproduction_base(INTERTWINE_BENCH_DATA_DIR));
}
BENCHMARK(BM_ReproductionBase)->Unit(benchmark::kMillisecond);
