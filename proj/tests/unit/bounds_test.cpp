#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <regex>
#include <sstream>

#include "intertwine/bounds.hpp"
#include "intertwine/error.hpp"
#include "intertwine/facts_io.hpp"
#include "test_data.hpp"
#include "verify.hpp"

using namespace intertwine;

namespace {

const FactBase& shipped() {
  static const FactBase base = verify::reproduction_base(INTERTWINE_TEST_DATA_DIR);
  return base;
}

SpaceRef space(const std::string& name) { return SpaceRef{name, Tri::unknown, Tri::unknown, {}, {}, {}, std::nullopt, {}, "test"}; }

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(Invariant, NamesRoundTrip) {
  const std::vector<Invariant> all = {Invariant::cat(),     Invariant::dcat(),   Invariant::icat(),
                                      Invariant::TC(),      Invariant::TC(3),    Invariant::dTC(5),
                                      Invariant::iTC(),     Invariant::iTC(8),   Invariant::cl("Q"),
                                      Invariant::zcl(2, "Q"), Invariant::zcl(3, "Z/2"), Invariant::H_positive("R")};
  for (const Invariant& inv : all) EXPECT_EQ(Invariant::parse(inv.name()), inv) << inv.name();
  EXPECT_EQ(Invariant::iTC().name(), "iTC");
  EXPECT_EQ(Invariant::parse("TC_3"), Invariant::TC(3));
  EXPECT_EQ(Invariant::parse("TC(2)"), Invariant::TC());
  EXPECT_THROW(Invariant::parse("cl"), DomainError);
  EXPECT_THROW(Invariant::parse("TC(1)"), DomainError);
  EXPECT_THROW(Invariant::parse("cat(3)"), DomainError);
  EXPECT_THROW(Invariant::parse("genus"), DomainError);
}

TEST(FactBase, AssertIntersectsAndIsIdempotent) {
  FactBase base;
  base.assert_fact("torus", Invariant::cat(), {1, 3}, "a");
  base.assert_fact("torus", Invariant::cat(), {2, kInfinity}, "b");
  EXPECT_EQ(base.interval("torus", Invariant::cat()), (Interval{2, 3}));
  base.assert_fact("torus", Invariant::cat(), {2, kInfinity}, "b");
  EXPECT_EQ(base.interval("torus", Invariant::cat()), (Interval{2, 3}));
}

TEST(FactBase, RefusesUnlabeledAndInvalidFacts) {
  FactBase base;
  EXPECT_THROW(base.assert_fact("x", Invariant::cat(), {1, 1}, ""), DomainError);
  EXPECT_THROW(base.assert_fact("x", Invariant::cat(), {2, 1}, "c"), DomainError);
  EXPECT_THROW(base.assert_fact("x", Invariant::TC(9), {1, 1}, "c"), DomainError);
}

TEST(FactBase, ContradictionNamesBothSides) {
  FactBase base = shipped();
  EXPECT_EQ(base.interval("torus", Invariant::icat()), (Interval{2, 2}));
  try {
    base.assert_fact("torus", Invariant::icat(), {3, 3}, "bogus claim");
    FAIL() << "expected a contradiction";
  } catch (const Contradiction& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("bogus claim"), std::string::npos);
    EXPECT_NE(what.find("icat(torus)"), std::string::npos);
  }
}

TEST(FactBase, ContradictionDuringPropagation) {
  FactBase base;
  base.assert_fact("x", Invariant::cat(), {1, 1}, "c1");
  base.assert_fact("x", Invariant::cl("Q"), {3, 3}, "c2", Derivation::Source::computed);
  EXPECT_THROW(base.propagate(), Contradiction);
}

TEST(FactBase, RelationsMustBeAcyclic) {
  FactBase base;
  SpaceRef a = space("a");
  a.product_of = {"b"};
  base.declare(a);
  SpaceRef b = space("b");
  b.product_of = {"a"};
  EXPECT_THROW(base.declare(b), DomainError);
  // The failed declaration left nothing behind.
  EXPECT_TRUE(base.spaces().at("b").product_of.empty());
  SpaceRef c = space("c");
  c.covered_by = {{"d", 0}};
  EXPECT_THROW(base.declare(c), DomainError);
}

TEST(Propagate, TorusViaTopologicalGroup) {
  const Derived d = shipped().derive("torus", Invariant::iTC());
  EXPECT_EQ(d.interval, (Interval{2, 2}));
  ASSERT_TRUE(d.upper);
  EXPECT_EQ(d.upper->rule, "R6");
  EXPECT_EQ(shipped().interval("torus", Invariant::icat()), (Interval{2, 2}));
}

TEST(Propagate, SphereTwo) {
  const Derived d = shipped().derive("sphere2", Invariant::iTC());
  EXPECT_EQ(d.interval, (Interval{2, 2}));
  EXPECT_EQ(d.lower->rule, "R12");
}

TEST(Propagate, CircleSequentialValues) {
  const Derived two = shipped().derive("circle", Invariant::iTC());
  EXPECT_EQ(two.interval, (Interval{1, 1}));
  EXPECT_EQ(two.lower->rule, "R10");
  EXPECT_EQ(two.upper->rule, "R1");
  const Derived three = shipped().derive("circle", Invariant::iTC(3));
  EXPECT_EQ(three.interval, (Interval{2, 2}));
  EXPECT_EQ(three.lower->rule, "R13");
}

TEST(Propagate, HigmanSeparation) {
  for (std::size_t m = 2; m <= 8; ++m) {
    EXPECT_EQ(shipped().interval("higman", Invariant::iTC(m)), (Interval{1, 1}));
    EXPECT_EQ(shipped().interval("higman", Invariant::dTC(m)), (Interval{static_cast<Value>(2 * (m - 1)), kInfinity}));
  }
  const auto separations = shipped().strict_separations();
  EXPECT_TRUE(std::any_of(separations.begin(), separations.end(), [](const Separation& s) { return s.space == "higman" && s.m == 5; }));
  const Derived d = shipped().derive("higman", Invariant::dTC(4));
  ASSERT_TRUE(d.lower);
  EXPECT_EQ(d.lower->rule, "R16");
  EXPECT_TRUE(d.lower->external);
}

TEST(Propagate, ExternalRuleCanBeDisabled) {
  FactBase::Options options;
  options.external_rules = false;
  const FactBase base = verify::reproduction_base(INTERTWINE_TEST_DATA_DIR, options);
  EXPECT_EQ(base.interval("higman", Invariant::dTC(4)), (Interval{1, kInfinity}));
}

TEST(Propagate, ContractibleSpaces) {
  EXPECT_EQ(shipped().interval("point", Invariant::iTC(5)), (Interval{0, 0}));
  EXPECT_EQ(shipped().derive("point", Invariant::iTC(5)).upper->rule, "R10");
  EXPECT_EQ(shipped().interval("point", Invariant::icat()), (Interval{0, 0}));
}

TEST(Propagate, KleinBottleStaysOpen) {
  EXPECT_EQ(shipped().interval("klein", Invariant::icat()), (Interval{1, 2}));
}

TEST(Propagate, ProductAndSphereProducts) {
  for (const char* name : {"genus2", "s2xs4", "s3xs3"}) EXPECT_EQ(shipped().interval(name, Invariant::icat()), (Interval{2, 2}));
}

TEST(Propagate, CoveringRule) {
  FactBase base;
  SpaceRef x = space("x");
  x.covered_by = {{"e", 3}};
  base.declare(x);
  base.assert_fact("e", Invariant::cat(), {1, 1}, "c");
  base.assert_fact("e", Invariant::TC(), {2, 2}, "c");
  base.propagate();
  EXPECT_EQ(base.interval("x", Invariant::icat()).hi, 5u);     // 3 * (1 + 1) - 1
  EXPECT_EQ(base.interval("x", Invariant::iTC()).hi, 17u);     // 3 * 2 * (2 + 1) - 1
  EXPECT_EQ(base.derive("x", Invariant::icat()).upper->rule, "R7");
}

TEST(Propagate, ProductAndWedgeRule) {
  FactBase base;
  SpaceRef w = space("w");
  w.wedge_of = {"a", "b"};
  base.declare(w);
  base.assert_fact("a", Invariant::icat(), {2, 2}, "c");
  base.assert_fact("w", Invariant::icat(), {0, 3}, "c");
  base.propagate();
  EXPECT_EQ(base.interval("w", Invariant::icat()), (Interval{2, 3}));
  EXPECT_EQ(base.interval("b", Invariant::icat()).hi, 3u);
  EXPECT_EQ(base.derive("b", Invariant::icat()).upper->rule, "R8");
}

TEST(Propagate, HomotopyEquivalenceTransportsBothWays) {
  FactBase base;
  SpaceRef x = space("x");
  x.homotopy_equivalent = {"y"};
  base.declare(x);
  base.assert_fact("x", Invariant::TC(), {3, 3}, "c");
  base.assert_fact("y", Invariant::cl("Q"), {1, 1}, "c", Derivation::Source::computed);
  base.propagate();
  EXPECT_EQ(base.interval("y", Invariant::TC()), (Interval{3, 3}));
  EXPECT_EQ(base.interval("x", Invariant::cl("Q")), (Interval{1, 1}));
}

TEST(Propagate, TopologicalGroupPowerRule) {
  FactBase base;
  SpaceRef g = space("g");
  g.topological_group = Tri::yes;
  base.declare(g);
  SpaceRef g2 = space("g2");
  g2.power_of = std::make_pair(std::string("g"), std::size_t{2});
  base.declare(g2);
  base.assert_fact("g2", Invariant::icat(), {0, 4}, "c");
  base.propagate();
  EXPECT_EQ(base.interval("g", Invariant::iTC(3)).hi, 4u);
}

TEST(Propagate, BudgetOverflowIsReported) {
  FactBase::Options options;
  options.round_budget = 1;
  FactBase base(options);
  base.assert_fact("x", Invariant::cat(), {0, 2}, "c");
  EXPECT_THROW(base.propagate(), BudgetExceeded);
}

TEST(Propagate, EveryTraceReplays) {
  for (const auto& [key, d] : shipped().entries()) {
    EXPECT_TRUE(shipped().replay(d.lower)) << key.second.name() << "(" << key.first << ")";
    EXPECT_TRUE(shipped().replay(d.upper)) << key.second.name() << "(" << key.first << ")";
    if (d.lower) {
      EXPECT_EQ(d.lower->value, d.interval.lo);
    }
    if (d.upper) {
      EXPECT_EQ(d.upper->value, d.interval.hi);
    }
  }
}

TEST(Propagate, NeverWidensAssertedIntervals) {
  FactBase base;
  load_facts(base, data_path("facts/classical.facts"));
  const auto before = base.entries();
  base.propagate();
  for (const auto& [key, d] : before) {
    const Interval after = base.interval(key.first, key.second);
    EXPECT_GE(after.lo, d.interval.lo);
    EXPECT_LE(after.hi, d.interval.hi);
  }
}

TEST(Propagate, OrderIndependent) {
  std::ifstream in(data_path("facts/classical.facts"));
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::vector<std::string> lines = lines_of(buffer.str());
  auto fingerprint = [](const FactBase& base) {
    std::string out;
    for (const auto& [key, d] : base.entries()) {
      out += key.first + " " + key.second.name() + " " + format_interval(d.interval) + "\n" + format_trace(d.lower) +
             format_trace(d.upper);
    }
    // Attribute citations carry the declaring line, which moves with the shuffle.
    return std::regex_replace(out, std::regex(R"( \(declared at [^)]*\))"), "");
  };
  FactBase reference;
  parse_facts(reference, buffer.str());
  reference.propagate();
  const std::string expected = fingerprint(reference);
  std::mt19937 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::string> shuffled = lines;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::string text;
    for (const std::string& line : shuffled) text += line + "\n";
    FactBase base;
    parse_facts(base, text);
    base.propagate();
    EXPECT_EQ(fingerprint(base), expected);
  }
}

TEST(Propagate, TracesCiteRuleStatements) {
  const Derived d = shipped().derive("torus", Invariant::iTC());
  const std::string trace = format_trace(d.upper);
  EXPECT_NE(trace.find("R6"), std::string::npos);
  EXPECT_NE(trace.find("cat(torus) ≤ 2"), std::string::npos);
  EXPECT_EQ(rule_statements().size(), 16u);
}

TEST(Derive, UnknownSpaceOrInvariant) {
  EXPECT_THROW(shipped().derive("nowhere", Invariant::cat()), DomainError);
  EXPECT_THROW(shipped().derive("torus", Invariant::iTC(12)), DomainError);
}
