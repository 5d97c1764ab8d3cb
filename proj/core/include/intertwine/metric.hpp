#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "intertwine/linalg.hpp"
#include "intertwine/rational.hpp"

namespace intertwine {

/// A point of one of the shipped metric spaces.
///
/// Euclidean: `coords` are the coordinates. Circle: `coords` holds one value,
/// the angle in turns (1 turn = 2*pi radians); canonical points lie in [0, 1),
/// path samples may carry unreduced lifts. Graph: `edge` and `coords[0]` in
/// [0, 1], the position along the edge from its first endpoint.
struct MetricPoint {
  Vector coords;
  std::size_t edge = 0;

  friend bool operator==(const MetricPoint&, const MetricPoint&) = default;
};

/// Lexicographic by (edge, coords).
bool operator<(const MetricPoint& a, const MetricPoint& b);

struct GraphEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  Rational length = 1;
};

class MetricSpace {
 public:
  enum class Kind { euclidean, circle, graph };

  static MetricSpace euclidean(std::size_t dimension);
  static MetricSpace circle();
  /// Connected graph with positive edge lengths and shortest-path metric.
  static MetricSpace graph(std::size_t vertex_count, std::vector<GraphEdge> edges);

  Kind kind() const { return kind_; }
  std::size_t dimension() const { return dimension_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  /// "euclidean:<d>", "circle" or "graph".
  std::string tag() const;

  /// Throws DomainError for malformed points (wrong arity, edge out of range, ...).
  void check(const MetricPoint& p) const;
  /// Unique representative: circle angles reduced mod 1, graph vertices on
  /// their lowest incident edge.
  MetricPoint canonical(const MetricPoint& p) const;
  double distance(const MetricPoint& a, const MetricPoint& b) const;
  /// Point at fraction s of the straight (or lifted) segment from a to b;
  /// not canonicalized. Graph segments must share an edge.
  MetricPoint interpolate(const MetricPoint& a, const MetricPoint& b, const Rational& s) const;

  MetricPoint point(const Vector& coords) const;
  MetricPoint turns(const Rational& t) const { return point({t}); }
  MetricPoint graph_point(std::size_t edge, const Rational& position) const;
  MetricPoint vertex(std::size_t v) const;

  nlohmann::json to_json() const;
  static MetricSpace from_json(const nlohmann::json& j);
  nlohmann::json point_to_json(const MetricPoint& p) const;
  MetricPoint point_from_json(const nlohmann::json& j) const;
  std::string format(const MetricPoint& p) const;

  friend bool operator==(const MetricSpace& a, const MetricSpace& b) {
    return a.kind_ == b.kind_ && a.dimension_ == b.dimension_ && a.vertex_count_ == b.vertex_count_;
  }

 private:
  MetricSpace(Kind kind, std::size_t dimension) : kind_(kind), dimension_(dimension) {}

  std::optional<std::size_t> vertex_of(const MetricPoint& p) const;
  double vertex_distance(std::size_t u, std::size_t v) const { return shortest_[u * vertex_count_ + v]; }

  Kind kind_;
  std::size_t dimension_;
  std::size_t vertex_count_ = 0;
  std::vector<GraphEdge> edges_;
  std::vector<double> shortest_;
};

}  // namespace intertwine
