#include <benchmark/benchmark.h>

#include "intertwine/measure.hpp"
#include "verify.hpp"

using namespace intertwine;

namespace {

FiniteMeasure spread(const MetricSpace& c, long atoms, long offset) {
  std::vector<Atom> out;
  for (long i = 0; i < atoms; ++i) out.push_back({c.turns(make_rational(2 * i + offset, 4 * atoms)), make_rational(1, atoms)});
  return FiniteMeasure(c, out);
}

}  // namespace

static void BM_LevyProkhorov(benchmark::State& state) {
  const MetricSpace c = MetricSpace::circle();
  const FiniteMeasure mu = spread(c, state.range(0), 0), nu = spread(c, state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(lp_distance(c, mu, nu));
}
BENCHMARK(BM_LevyProkhorov)->DenseRange(1, 8);

static void BM_LevyProkhorovBisection(benchmark::State& state) {
  const MetricSpace c = MetricSpace::circle();
  const FiniteMeasure mu = spread(c, state.range(0), 0), nu = spread(c, state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(verify::lp_distance_bisection(c, mu, nu));
}
BENCHMARK(BM_LevyProkhorovBisection)->DenseRange(1, 8);

static void BM_Hausdorff(benchmark::State& state) {
  const MetricSpace c = MetricSpace::circle();
  const FiniteSet a = support(spread(c, state.range(0), 0)), b = support(spread(c, state.range(0), 1));
  for (auto _ : state) benchmark::DoNotOptimize(hausdorff_distance(c, a, b));
}
BENCHMARK(BM_Hausdorff)->RangeMultiplier(2)->Range(1, 64);
