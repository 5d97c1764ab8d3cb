#include <gtest/gtest.h>

#include "intertwine/diagram.hpp"
#include "intertwine/error.hpp"
#include "intertwine/resolver.hpp"
#include "intertwine/trace.hpp"
#include "test_data.hpp"
#include "verify.hpp"

using namespace intertwine;

namespace {

BranchingDiagram example(const std::string& name) { return load_diagram(data_path("diagrams/" + name + ".bd")); }

}  // namespace

TEST(SymmetricTrace, SupportTwoResolversAgree) {
  for (const auto& path : verify::corpus_diagrams(INTERTWINE_TEST_DATA_DIR)) {
    const BranchingDiagram d = load_diagram(path);
    const auto vertices = enumerate_resolvers(d, 2).vertices;
    const Vector times = probe_times(d);
    for (std::size_t i = 1; i < vertices.size(); ++i) {
      EXPECT_EQ(symmetric_trace(vertices[i], d, times), symmetric_trace(vertices[0], d, times)) << d.name;
    }
  }
}

TEST(SymmetricTrace, MergesAtMeetingPoints) {
  const BranchingDiagram d = example("example1");
  const auto vertices = enumerate_resolvers(d, 2).vertices;
  const auto trace = symmetric_trace(vertices[0], d, {Rational(0), make_rational(1, 4), make_rational(1, 2)});
  EXPECT_TRUE(trace[0].merged);
  EXPECT_FALSE(trace[1].merged);
  EXPECT_TRUE(trace[2].merged);
  EXPECT_EQ(trace[2].sp2.size(), 2u);
  EXPECT_EQ(trace[2].sp2[0], trace[2].sp2[1]);
}

TEST(SymmetricTrace, RejectsLargerSupport) {
  const BranchingDiagram d = example("example2");
  const auto vertices = enumerate_resolvers(d, 3).vertices;
  ASSERT_FALSE(vertices.empty());
  EXPECT_THROW(symmetric_trace(vertices[0], d, {Rational(0)}), DomainError);
}

TEST(Support3, CounterexampleTriggers) {
  const BranchingDiagram d = example("notgeneral");
  const auto vertices = enumerate_resolvers(d, 3).vertices;
  EXPECT_TRUE(support3_counterexample_check(d, vertices));
}

TEST(Support3, SupportTwoDiagramsDoNotTrigger) {
  for (const char* name : {"example1", "example5"}) {
    const BranchingDiagram d = example(name);
    EXPECT_FALSE(support3_counterexample_check(d, enumerate_resolvers(d, 3).vertices)) << name;
  }
}

TEST(Support3, ThreeRouteResolversOfExampleTwoDisagree) {
  const BranchingDiagram d = example("example2");
  const auto vertices = enumerate_resolvers(d, 3).vertices;
  ASSERT_EQ(vertices.size(), 2u);
  const Support3Report report = support3_report(d, vertices, probe_times(d));
  EXPECT_TRUE(report.resolver_dependent);
  ASSERT_TRUE(report.dependence_time.has_value());
  EXPECT_NE(weighted_configuration(vertices[0], d, *report.dependence_time),
            weighted_configuration(vertices[1], d, *report.dependence_time));
}

TEST(Continuity, StepHalvesWithTheSampleSpacing) {
  const BranchingDiagram d = example("example1");
  const auto vertices = enumerate_resolvers(d, 2).vertices;
  const auto rows = support_continuity_report(vertices[0], d, {make_rational(1, 100), make_rational(1, 200), make_rational(1, 400)});
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_NEAR(rows[1].max_step, rows[0].max_step / 2, 1e-12);
  EXPECT_NEAR(rows[2].max_step, rows[1].max_step / 2, 1e-12);
}

TEST(Continuity, WeightTransferPathJumps) {
  const MetricSpace c = MetricSpace::circle();
  const auto sampler = weight_transfer_path(c, c.turns(0), c.turns(make_rational(1, 4)));
  EXPECT_EQ(sampler(Rational(1)).support_size(), 1u);
  EXPECT_EQ(sampler(make_rational(1, 2)).support_size(), 2u);
  const auto rows = support_step_report(c, sampler, {make_rational(1, 100), make_rational(1, 1000)});
  EXPECT_GE(rows[1].max_step, 0.2);
  EXPECT_DOUBLE_EQ(rows[0].max_step, rows[1].max_step);
  EXPECT_THROW(support_step_report(c, sampler, {make_rational(2, 3)}), DomainError);
}
