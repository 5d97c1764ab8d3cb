#include <benchmark/benchmark.h>

#include "intertwine/diagram.hpp"
#include "intertwine/navigate.hpp"
#include "intertwine/resolver.hpp"

using namespace intertwine;

static void BM_EnumerateResolvers(benchmark::State& state) {
  const char* names[] = {"example1", "example3", "example4"};
  const BranchingDiagram d =
      load_diagram(std::string(INTERTWINE_BENCH_DATA_DIR) + "/diagrams/" + names[state.range(0)] + ".bd");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_resolvers(d, 4));
  state.SetLabel(d.name);
}
BENCHMARK(BM_EnumerateResolvers)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

static void BM_SequentialCompose(benchmark::State& state) {
  const MetricSpace c = MetricSpace::circle();
  std::vector<MetricPoint> points;
  for (long i = 0; i < state.range(0); ++i) points.push_back(c.turns(make_rational(3 * i + 1, 11)));
  for (auto _ : state) {
    const Navigation nav = sequential_compose(c, circle_pair_navigator(), points);
    benchmark::DoNotOptimize(min_support(nav.diagram));
  }
}
BENCHMARK(BM_SequentialCompose)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
