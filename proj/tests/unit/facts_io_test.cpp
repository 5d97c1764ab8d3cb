#include <gtest/gtest.h>

#include "intertwine/error.hpp"
#include "intertwine/facts_io.hpp"
#include "test_data.hpp"
#include "verify.hpp"

using namespace intertwine;

TEST(FactsFile, ParsesSpacesAndFacts) {
  FactBase base;
  parse_facts(base,
              "# comment\n"
              "@space t topological_group=true covered_by=e:2,f:3 product_of=a,b\n"
              "\n"
              "t cat 2 2 a citation with spaces\n"
              "t TC(3) 1 inf another\n");
  const SpaceRef& t = base.spaces().at("t");
  EXPECT_EQ(t.topological_group, Tri::yes);
  EXPECT_EQ(t.covered_by.size(), 2u);
  EXPECT_EQ(t.product_of, (std::vector<std::string>{"a", "b"}));
  EXPECT_TRUE(base.has_space("e"));
  EXPECT_EQ(base.interval("t", Invariant::cat()), (Interval{2, 2}));
  EXPECT_EQ(base.interval("t", Invariant::TC(3)), (Interval{1, kInfinity}));
  EXPECT_EQ(base.derive("t", Invariant::cat()).lower->citation, "a citation with spaces");
}

TEST(FactsFile, ErrorsCarryLineNumbers) {
  FactBase base;
  try {
    parse_facts(base, "x cat 1 1 ok\nx cat 1\n", "f.facts");
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("f.facts:2"), std::string::npos);
  }
  EXPECT_THROW(parse_facts(base, "x cat 1 1\n"), DomainError);          // unlabeled
  EXPECT_THROW(parse_facts(base, "x frob 1 1 c\n"), DomainError);       // unknown invariant
  EXPECT_THROW(parse_facts(base, "@space x colour=red\n"), DomainError);  // unknown attribute
  EXPECT_THROW(parse_facts(base, "x cat one 1 c\n"), DomainError);
}

TEST(FactsFile, ShippedPackLoadsAndEveryFactIsCited) {
  FactBase base;
  load_facts(base, data_path("facts/classical.facts"));
  for (const auto& [key, d] : base.entries()) {
    if (d.lower) {
      EXPECT_FALSE(d.lower->citation.empty());
    }
    if (d.upper) {
      EXPECT_FALSE(d.upper->citation.empty());
    }
  }
  EXPECT_NO_THROW(base.propagate());
}

TEST(Report, JsonRoundTrips) {
  const FactBase base = verify::reproduction_base(INTERTWINE_TEST_DATA_DIR);
  const nlohmann::json report = report_to_json(base, true);
  const auto parsed = rows_from_json(nlohmann::json::parse(report.dump()));
  EXPECT_EQ(parsed, report_rows(base));
  EXPECT_FALSE(report.at("separations").empty());
}
