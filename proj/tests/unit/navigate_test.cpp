#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>
#include <random>

#include "intertwine/error.hpp"
#include "intertwine/measure.hpp"
#include "intertwine/navigate.hpp"
#include "intertwine/resolver.hpp"

using namespace intertwine;

TEST(Timestamps, UniformSchemeBreaksAtEqualSteps) {
  const TimestampScheme s = TimestampScheme::uniform(4);
  EXPECT_EQ(s.breakpoints(), (Vector{make_rational(1, 4), make_rational(1, 2), make_rational(3, 4)}));
  EXPECT_NO_THROW(s.check());
  EXPECT_THROW((TimestampScheme{{Rational(2), Rational(3)}}.check()), DomainError);
  EXPECT_THROW((TimestampScheme{{Rational(2), Rational(1)}}.check()), DomainError);
}

TEST(JoinWeights, PartitionOfUnityAndInterpolation) {
  for (std::size_t m = 2; m <= 8; ++m) {
    for (int k = 0; k <= 240; ++k) {
      const Vector w = join_weights(m, make_rational(k, 240));
      Rational total = 0;
      for (const Rational& x : w) {
        EXPECT_GE(x, 0);
        total += x;
      }
      EXPECT_EQ(total, 1);
    }
    for (std::size_t i = 0; i < m; ++i) {
      const Vector w = join_weights(m, make_rational(static_cast<long>(i), static_cast<long>(m - 1)));
      for (std::size_t j = 0; j < m; ++j) EXPECT_EQ(w[j], i == j ? 1 : 0);
    }
  }
}

TEST(ThetaConcat, HitsEndpointsAndBreakpoints) {
  const MetricSpace c = MetricSpace::circle();
  const std::vector<SampledPath> paths = {
      {{0, 1}, {c.turns(0), c.turns(make_rational(1, 4))}},
      {{0, 1}, {c.turns(make_rational(1, 4)), MetricPoint{{make_rational(-1, 2)}, 0}}},
      {{0, 1}, {c.turns(make_rational(1, 2)), c.turns(make_rational(5, 8))}},
  };
  const TimestampScheme s = TimestampScheme::uniform(3);
  const SampledPath theta = theta_concat(c, paths, s);
  EXPECT_EQ(theta.at(c, 0), c.turns(0));
  EXPECT_EQ(theta.at(c, make_rational(1, 3)), c.turns(make_rational(1, 4)));
  EXPECT_EQ(theta.at(c, make_rational(2, 3)), c.turns(make_rational(1, 2)));
  EXPECT_EQ(theta.at(c, 1), c.turns(make_rational(5, 8)));
  // second path winds clockwise through 0
  EXPECT_EQ(theta.at(c, make_rational(1, 2)), c.turns(make_rational(7, 8)));
}

TEST(ThetaConcat, RejectsDiscontinuousInput) {
  const MetricSpace c = MetricSpace::circle();
  const std::vector<SampledPath> paths = {
      {{0, 1}, {c.turns(0), c.turns(make_rational(1, 4))}},
      {{0, 1}, {c.turns(make_rational(1, 3)), c.turns(0)}},
  };
  EXPECT_THROW(theta_concat(c, paths, TimestampScheme::uniform(2)), DomainError);
}

TEST(CircleNavigate, EqualPointsGiveAConstantDirac) {
  const Navigation nav = circle_navigate(make_rational(1, 3), make_rational(1, 3));
  for (const FiniteMeasure& mu : nav.measures) EXPECT_TRUE(mu.is_dirac());
}

TEST(CircleNavigate, AntipodalMidpointIsTwoAtoms) {
  const MetricSpace c = MetricSpace::circle();
  const Navigation nav = circle_navigate(0, make_rational(1, 2), {Rational(0), make_rational(1, 2), Rational(1)});
  const FiniteMeasure& mid = nav.measures[1];
  ASSERT_EQ(mid.support_size(), 2u);
  EXPECT_EQ(mid.atoms()[0].weight, make_rational(1, 2));
  EXPECT_NEAR(c.distance(mid.atoms()[0].point, mid.atoms()[1].point), std::numbers::pi, 1e-12);
  EXPECT_TRUE(nav.measures[0].is_dirac());
  EXPECT_TRUE(nav.measures[2].is_dirac());
}

TEST(CircleNavigate, PushforwardAgreesWithEveryResolver) {
  const Navigation nav = circle_navigate(make_rational(1, 8), make_rational(3, 4));
  for (const Resolver& r : enumerate_resolvers(nav.diagram, 4).vertices) {
    EXPECT_EQ(pushforward(r, nav.diagram, nav.times), nav.measures);
  }
}

TEST(CircleNavigate, PerturbingTheTargetMovesThePathContinuously) {
  const MetricSpace c = MetricSpace::circle();
  const Rational x = make_rational(1, 10), y = make_rational(3, 5);
  const Navigation base = circle_navigate(x, y);
  double previous = 1;
  for (const Rational& h : {make_rational(1, 10), make_rational(1, 100), make_rational(1, 1000)}) {
    const Rational hturn = h / 6;  // h radians, roughly, in turns
    const Navigation moved = circle_navigate(x, y + hturn);
    double worst = 0;
    for (std::size_t i = 0; i < base.times.size(); ++i) worst = std::max(worst, lp_distance(c, base.measures[i], moved.measures[i]));
    EXPECT_LE(worst, 2 * std::numbers::pi * to_double(hturn) + 1e-12);
    EXPECT_LT(worst, previous);
    previous = worst;
  }
}

TEST(SequentialCompose, TwoPointsReduceToTheNavigator) {
  const MetricSpace c = MetricSpace::circle();
  const Navigation pair = circle_navigate(make_rational(1, 8), make_rational(1, 2));
  const Navigation composed = sequential_compose(c, circle_pair_navigator(), {c.turns(make_rational(1, 8)), c.turns(make_rational(1, 2))});
  EXPECT_EQ(composed.measures, pair.measures);
}

TEST(SequentialCompose, HitsDiracsAtTheNodes) {
  const MetricSpace c = MetricSpace::circle();
  const std::vector<MetricPoint> points = {c.turns(0), c.turns(make_rational(1, 4)), c.turns(make_rational(1, 2))};
  const Navigation nav = sequential_compose(c, circle_pair_navigator(), points,
                                            {Rational(0), make_rational(1, 4), make_rational(1, 2), Rational(1)});
  EXPECT_EQ(nav.measures[0], dirac(c, points[0]));
  EXPECT_EQ(nav.measures[2], dirac(c, points[1]));
  EXPECT_EQ(nav.measures[3], dirac(c, points[2]));
  EXPECT_EQ(min_support(nav.diagram), 2u);
}

TEST(SequentialCompose, RandomQuadruplesNeedTwoRoutes) {
  const MetricSpace c = MetricSpace::circle();
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<MetricPoint> points;
    for (int i = 0; i < 4; ++i) points.push_back(c.turns(make_rational(static_cast<int>(rng() % 12), 12)));
    const bool constant = std::all_of(points.begin(), points.end(), [&](const MetricPoint& p) { return p == points[0]; });
    EXPECT_EQ(min_support(sequential_compose(c, circle_pair_navigator(), points).diagram), constant ? 1u : 2u);
  }
}

TEST(SequentialCompose, AllEqualPointsGiveSupportOne) {
  const MetricSpace c = MetricSpace::circle();
  const MetricPoint p = c.turns(make_rational(2, 7));
  const Navigation nav = sequential_compose(c, circle_pair_navigator(), {p, p, p});
  EXPECT_EQ(min_support(nav.diagram), 1u);
  for (const FiniteMeasure& mu : nav.measures) EXPECT_EQ(mu, dirac(c, p));
}
