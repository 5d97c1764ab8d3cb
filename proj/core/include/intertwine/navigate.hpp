#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "intertwine/diagram.hpp"
#include "intertwine/path.hpp"

namespace intertwine {

/// Rates a_1 > ... > a_{k} > 1; the concatenation switches paths at t = 1/a_i.
struct TimestampScheme {
  Vector rates;

  /// a_i = k / i for i = 1..k-1: breakpoints at i/k, equal time per path.
  static TimestampScheme uniform(std::size_t path_count);
  /// Throws DomainError unless strictly decreasing and every rate exceeds 1.
  void check() const;
  Vector breakpoints() const;
};

/// Concatenation f_1 * ... * f_m of unit-interval paths, with f_1 run on
/// [0, 1/a_1], f_i on [1/a_{i-1}, 1/a_i] and f_m on [1/a_{m-1}, 1].
/// Requires f_i(1) = f_{i+1}(0) exactly.
SampledPath theta_concat(const MetricSpace& space, const std::vector<SampledPath>& paths, const TimestampScheme& scheme);

/// Weights w_1(t), ..., w_m(t) built from the Lagrange-type products
/// z_j(t) = prod_{i != j}(t - t_i) at nodes t_i = (i-1)/(m-1).
Vector join_weights(std::size_t m, const Rational& t);

struct Navigation {
  BranchingDiagram diagram;
  /// The measure path at the sample times passed in (default: hundredths).
  Vector times;
  std::vector<FiniteMeasure> measures;
};

/// Half the mass along the counterclockwise arc and half along the clockwise
/// arc from x to y. Antipodal points are not special: both arcs are always used.
Navigation circle_navigate(const Rational& x, const Rational& y, const Vector& sample_times = {});

/// Pairwise navigation: a one-interval (or longer) diagram from delta_x to delta_y.
using PairNavigator = std::function<BranchingDiagram(const MetricPoint&, const MetricPoint&)>;

PairNavigator circle_pair_navigator();

/// Chains pairwise navigations x_1 -> x_2 -> ... -> x_m with the uniform
/// scheme, so the measure path is delta_{x_i} at t_i = (i-1)/(m-1). Junctions
/// become full meeting groups; coincident strands are merged.
Navigation sequential_compose(const MetricSpace& space, const PairNavigator& nav2, const std::vector<MetricPoint>& points,
                              const Vector& sample_times = {});

}  // namespace intertwine
