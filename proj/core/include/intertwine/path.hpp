#pragma once

#include <vector>

#include "intertwine/metric.hpp"
#include "intertwine/rational.hpp"

namespace intertwine {

/// Piecewise-linear path through rational sample points.
///
/// Times are strictly increasing; between samples the path interpolates
/// linearly in the space's coordinates (circle paths interpolate lifts, so a
/// segment can wind in either direction).
struct SampledPath {
  Vector times;
  std::vector<MetricPoint> points;

  static SampledPath constant(const MetricPoint& p, const Rational& start = 0, const Rational& end = 1);

  const Rational& start() const { return times.front(); }
  const Rational& end() const { return times.back(); }

  /// Throws DomainError unless there are >= 2 samples with strictly increasing times.
  void check(const MetricSpace& space) const;
  /// Canonical point at time t in [start, end].
  MetricPoint at(const MetricSpace& space, const Rational& t) const;
  /// Same path reparametrized by the affine map t -> scale * t + shift (scale > 0).
  SampledPath affine_time(const Rational& scale, const Rational& shift) const;
  /// Exact equality of canonical sample data after evaluating both on the union of their sample times.
  bool same_trajectory(const MetricSpace& space, const SampledPath& other) const;

  friend bool operator==(const SampledPath&, const SampledPath&) = default;
};

}  // namespace intertwine
