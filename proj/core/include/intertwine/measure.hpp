#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "intertwine/metric.hpp"
#include "intertwine/rational.hpp"

namespace intertwine {

struct Atom {
  MetricPoint point;
  Rational weight;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Finitely supported probability measure with exact weights.
///
/// Always canonical: points canonical in their space, duplicates merged,
/// atoms sorted by point, every weight positive, total weight exactly one.
class FiniteMeasure {
 public:
  /// Canonicalizes `atoms`; zero-weight atoms are dropped. Throws DomainError
  /// on negative weights or total weight other than one.
  FiniteMeasure(const MetricSpace& space, std::vector<Atom> atoms);

  static FiniteMeasure dirac(const MetricSpace& space, const MetricPoint& x);

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t support_size() const { return atoms_.size(); }
  bool is_dirac() const { return atoms_.size() == 1; }

  friend bool operator==(const FiniteMeasure&, const FiniteMeasure&) = default;

 private:
  std::vector<Atom> atoms_;
};

/// Sorted set of distinct canonical points.
using FiniteSet = std::vector<MetricPoint>;

inline FiniteMeasure dirac(const MetricSpace& space, const MetricPoint& x) { return FiniteMeasure::dirac(space, x); }

FiniteSet support(const FiniteMeasure& mu);
FiniteSet make_finite_set(const MetricSpace& space, std::vector<MetricPoint> points);

struct LpOptions {
  std::size_t support_cap = 16;
};

/// Levy-Prokhorov distance with closed neighborhoods.
///
/// Neighborhoods of subsets of the joint support only change at pairwise
/// distances, so the infimum is found exactly: on each interval between
/// consecutive distances the least feasible epsilon is the largest mass
/// defect over all subsets. Throws DomainError when the joint support
/// exceeds the cap.
double lp_distance(const MetricSpace& space, const FiniteMeasure& mu, const FiniteMeasure& nu, const LpOptions& options = {});

/// Max-min Hausdorff distance. Throws DomainError on empty sets.
double hausdorff_distance(const MetricSpace& space, const FiniteSet& a, const FiniteSet& b);

std::string format(const MetricSpace& space, const FiniteMeasure& mu);

}  // namespace intertwine
