#include <benchmark/benchmark.h>

#include "intertwine/complex.hpp"
#include "intertwine/ring.hpp"

using namespace intertwine;

namespace {

SimplicialComplex load(const char* name) {
  return load_complex(std::string(INTERTWINE_BENCH_DATA_DIR) + "/complexes/" + name + ".cx");
}

const char* const kNames[] = {"circle", "sphere2", "torus", "genus2", "klein"};

}  // namespace

static void BM_CohomologyRing(benchmark::State& state) {
  const SimplicialComplex k = load(kNames[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(cohomology_ring(k, FieldSpec::rationals()));
  state.SetLabel(k.name());
}
BENCHMARK(BM_CohomologyRing)->DenseRange(0, 4);

static void BM_CupLength(benchmark::State& state) {
  const GradedAlgebra a = cohomology_ring(load(kNames[state.range(0)]), FieldSpec::rationals());
  for (auto _ : state) benchmark::DoNotOptimize(cup_length(a));
  state.SetLabel(a.name());
}
BENCHMARK(BM_CupLength)->DenseRange(0, 4);

static void BM_ZeroDivisorCupLength(benchmark::State& state) {
  const GradedAlgebra a = cohomology_ring(load("genus2"), FieldSpec::rationals());
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zero_divisor_cup_length(a, m));
}
BENCHMARK(BM_ZeroDivisorCupLength)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
