#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "intertwine/measure.hpp"
#include "intertwine/metric.hpp"
#include "intertwine/path.hpp"

namespace intertwine {

struct Strand {
  std::string id;
  Rational weight;
};

/// Strands of the interval before an event that merge and split into the
/// listed strands of the interval after it.
struct MeetingGroup {
  std::vector<std::string> incoming;
  std::vector<std::string> outgoing;
};

struct Realization {
  MetricSpace space;
  /// Path of each strand over its interval [tau_j, tau_{j+1}].
  std::map<std::string, SampledPath> paths;
};

/// Weighted strands between event times, the combinatorial form of an
/// intertwining measure path.
struct BranchingDiagram {
  std::string name;
  Vector event_times;                         // 0 = tau_0 < ... < tau_K = 1
  std::vector<std::vector<Strand>> intervals;  // K intervals
  std::vector<std::vector<MeetingGroup>> events;  // K - 1 interior events
  std::optional<Realization> realization;

  std::size_t interval_count() const { return intervals.size(); }
  /// Interval containing t; an interior event time belongs to the interval it ends.
  std::size_t interval_at(const Rational& t) const;
  const Strand& strand(std::size_t interval, std::size_t index) const { return intervals[interval][index]; }
  /// (interval, index) of a strand id. Throws DomainError if unknown.
  std::pair<std::size_t, std::size_t> locate(const std::string& id) const;
};

/// Every violated invariant, each with its location; empty when valid.
std::vector<std::string> validate(const BranchingDiagram& diagram);
/// Throws DomainError listing the diagnostics of validate().
void check(const BranchingDiagram& diagram);

/// Position of a strand at time t (requires a realization).
MetricPoint strand_position(const BranchingDiagram& diagram, std::size_t interval, std::size_t index, const Rational& t);

/// The measure path itself: sum over strands alive at t of weight * delta(position).
FiniteMeasure measure_at(const BranchingDiagram& diagram, const Rational& t);

/// Merge strands of one interval that follow identical trajectories and lie
/// in the same meeting groups. Needs a realization; returns the input otherwise.
BranchingDiagram merge_coincident_strands(const BranchingDiagram& diagram);

/// Diagram file (JSON):
/// {"name", "event_times": ["0", ..., "1"], "intervals": [[{"id", "weight": "p/q"}, ...], ...],
///  "events": [[{"in": [ids], "out": [ids]}, ...], ...],
///  "realization": {"space": ..., "paths": {"id": [["t", point], ...]}}}
BranchingDiagram parse_diagram(const std::string& json_text);
BranchingDiagram load_diagram(const std::filesystem::path& path);
nlohmann::json diagram_to_json(const BranchingDiagram& diagram);

/// n equally spaced times 0, 1/(n-1), ..., 1.
Vector uniform_times(std::size_t n);

}  // namespace intertwine
