#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "intertwine/resolver.hpp"

namespace intertwine {

/// Unordered weighted pair traced by a support-2 resolver at one time.
///
/// `entries` holds the (point, weight) pairs sorted; when the two routes sit at
/// the same point they collapse to that point with weight one. `sp2` is the
/// underlying unweighted pair f(t) + g(t), sorted (a repeated point when merged).
struct SymmetricTracePoint {
  std::vector<Atom> entries;
  std::vector<MetricPoint> sp2;
  bool merged = false;

  friend bool operator==(const SymmetricTracePoint&, const SymmetricTracePoint&) = default;
};

/// Throws DomainError for resolvers with more than two routes.
std::vector<SymmetricTracePoint> symmetric_trace(const Resolver& resolver, const BranchingDiagram& diagram,
                                                 const Vector& sample_times);

/// Route positions with route weights at time t, sorted, never merged.
std::vector<Atom> weighted_configuration(const Resolver& resolver, const BranchingDiagram& diagram, const Rational& t);

struct Support3Report {
  /// Two sample times with the same measure but different weighted configurations.
  bool non_injective = false;
  std::optional<std::pair<Rational, Rational>> collision_times;
  /// Two resolvers with different weighted configurations at one sample time.
  bool resolver_dependent = false;
  std::optional<Rational> dependence_time;

  bool triggered() const { return non_injective || resolver_dependent; }
};

Support3Report support3_report(const BranchingDiagram& diagram, const std::vector<Resolver>& resolvers,
                               const Vector& sample_times);

/// True iff the report finds a failure of injectivity or of resolver invariance.
/// Sample times default to the hundredth grid plus every realization breakpoint.
bool support3_counterexample_check(const BranchingDiagram& diagram, const std::vector<Resolver>& resolvers);

struct ContinuityRow {
  Rational dt;
  double max_step = 0;
  Rational at;  // left sample time of a worst step
};

using MeasureSampler = std::function<FiniteMeasure(const Rational&)>;

/// For each dt (with 1/dt integral), max Hausdorff distance between supports at consecutive samples.
std::vector<ContinuityRow> support_step_report(const MetricSpace& space, const MeasureSampler& sampler, const Vector& dts);

std::vector<ContinuityRow> support_continuity_report(const Resolver& resolver, const BranchingDiagram& diagram,
                                                     const Vector& dts);

/// Raw measure path (1/2 - t/2) delta_p + (1/2 + t/2) delta_q for t < 1 and
/// delta_q at t = 1: the weights drift through (1/4, 3/4) and the support
/// drops a point at the end, so no resolver exists.
MeasureSampler weight_transfer_path(const MetricSpace& space, const MetricPoint& p, const MetricPoint& q);

/// Hundredths of [0, 1] together with every breakpoint of the diagram's realization.
Vector probe_times(const BranchingDiagram& diagram);

}  // namespace intertwine
