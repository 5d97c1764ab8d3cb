#include "intertwine/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "intertwine/error.hpp"

namespace intertwine {

bool operator<(const MetricPoint& a, const MetricPoint& b) {
  if (a.edge != b.edge) return a.edge < b.edge;
  return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(), b.coords.end());
}

MetricSpace MetricSpace::euclidean(std::size_t dimension) {
  if (dimension == 0) throw DomainError("euclidean space needs dimension >= 1");
  return MetricSpace(Kind::euclidean, dimension);
}

MetricSpace MetricSpace::circle() { return MetricSpace(Kind::circle, 1); }

MetricSpace MetricSpace::graph(std::size_t vertex_count, std::vector<GraphEdge> edges) {
  if (vertex_count == 0 || edges.empty()) throw DomainError("graph space needs vertices and edges");
  MetricSpace space(Kind::graph, 1);
  space.vertex_count_ = vertex_count;
  const double inf = std::numeric_limits<double>::infinity();
  space.shortest_.assign(vertex_count * vertex_count, inf);
  for (std::size_t v = 0; v < vertex_count; ++v) space.shortest_[v * vertex_count + v] = 0;
  for (const GraphEdge& e : edges) {
    if (e.from >= vertex_count || e.to >= vertex_count) throw DomainError("graph edge endpoint out of range");
    if (e.from == e.to) throw DomainError("graph loops are not supported");
    if (e.length <= 0) throw DomainError("graph edge lengths must be positive");
    const double len = to_double(e.length);
    double& a = space.shortest_[e.from * vertex_count + e.to];
    double& b = space.shortest_[e.to * vertex_count + e.from];
    a = std::min(a, len);
    b = std::min(b, len);
  }
  for (std::size_t k = 0; k < vertex_count; ++k) {
    for (std::size_t i = 0; i < vertex_count; ++i) {
      for (std::size_t j = 0; j < vertex_count; ++j) {
        double via = space.shortest_[i * vertex_count + k] + space.shortest_[k * vertex_count + j];
        if (via < space.shortest_[i * vertex_count + j]) space.shortest_[i * vertex_count + j] = via;
      }
    }
  }
  for (double d : space.shortest_) {
    if (d == inf) throw DomainError("graph space is not connected");
  }
  space.edges_ = std::move(edges);
  return space;
}

std::string MetricSpace::tag() const {
  switch (kind_) {
    case Kind::euclidean: return "euclidean:" + std::to_string(dimension_);
    case Kind::circle: return "circle";
    case Kind::graph: return "graph";
  }
  return "";
}

void MetricSpace::check(const MetricPoint& p) const {
  switch (kind_) {
    case Kind::euclidean:
      if (p.coords.size() != dimension_ || p.edge != 0) throw DomainError("euclidean point has wrong arity");
      return;
    case Kind::circle:
      if (p.coords.size() != 1 || p.edge != 0) throw DomainError("circle point needs exactly one angle");
      return;
    case Kind::graph:
      if (p.coords.size() != 1) throw DomainError("graph point needs one edge position");
      if (p.edge >= edges_.size()) throw DomainError("graph point edge out of range");
      if (p.coords[0] < 0 || p.coords[0] > 1) throw DomainError("graph point position outside [0, 1]");
      return;
  }
}

std::optional<std::size_t> MetricSpace::vertex_of(const MetricPoint& p) const {
  if (p.coords[0] == 0) return edges_[p.edge].from;
  if (p.coords[0] == 1) return edges_[p.edge].to;
  return std::nullopt;
}

MetricPoint MetricSpace::canonical(const MetricPoint& p) const {
  check(p);
  switch (kind_) {
    case Kind::euclidean: return p;
    case Kind::circle: return MetricPoint{{fractional_part(p.coords[0])}, 0};
    case Kind::graph:
      if (auto v = vertex_of(p)) return vertex(*v);
      return p;
  }
  return p;
}

MetricPoint MetricSpace::point(const Vector& coords) const {
  MetricPoint p{coords, 0};
  return canonical(p);
}

MetricPoint MetricSpace::graph_point(std::size_t edge, const Rational& position) const {
  return canonical(MetricPoint{{position}, edge});
}

MetricPoint MetricSpace::vertex(std::size_t v) const {
  if (kind_ != Kind::graph) throw DomainError("vertex points exist only in graph spaces");
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edges_[e].from == v) return MetricPoint{{Rational(0)}, e};
    if (edges_[e].to == v) return MetricPoint{{Rational(1)}, e};
  }
  throw DomainError("graph vertex " + std::to_string(v) + " has no incident edge");
}

double MetricSpace::distance(const MetricPoint& a, const MetricPoint& b) const {
  switch (kind_) {
    case Kind::euclidean: {
      Rational sum = 0;
      for (std::size_t i = 0; i < a.coords.size(); ++i) {
        Rational d = a.coords[i] - b.coords[i];
        sum += d * d;
      }
      return std::sqrt(to_double(sum));
    }
    case Kind::circle: {
      Rational f = fractional_part(a.coords[0] - b.coords[0]);
      Rational g = 1 - f;
      return 2 * std::numbers::pi * to_double(f < g ? f : g);
    }
    case Kind::graph: {
      const GraphEdge& ea = edges_[a.edge];
      const GraphEdge& eb = edges_[b.edge];
      const double la = to_double(ea.length);
      const double lb = to_double(eb.length);
      const double sa = to_double(a.coords[0]);
      const double sb = to_double(b.coords[0]);
      double best = std::numeric_limits<double>::infinity();
      if (a.edge == b.edge) {
        Rational gap = a.coords[0] - b.coords[0];
        best = std::abs(to_double(gap)) * la;
      }
      const std::size_t ua[2] = {ea.from, ea.to};
      const double da[2] = {sa * la, (1 - sa) * la};
      const std::size_t ub[2] = {eb.from, eb.to};
      const double db[2] = {sb * lb, (1 - sb) * lb};
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) best = std::min(best, da[i] + vertex_distance(ua[i], ub[j]) + db[j]);
      }
      return best;
    }
  }
  return 0;
}

MetricPoint MetricSpace::interpolate(const MetricPoint& a, const MetricPoint& b, const Rational& s) const {
  auto lerp = [&s](const Rational& x, const Rational& y) -> Rational { return x + s * (y - x); };
  switch (kind_) {
    case Kind::euclidean:
    case Kind::circle: {
      MetricPoint out{Vector(a.coords.size()), 0};
      for (std::size_t i = 0; i < a.coords.size(); ++i) out.coords[i] = lerp(a.coords[i], b.coords[i]);
      return out;
    }
    case Kind::graph: {
      // Express both endpoints on one common edge.
      auto position_on = [&](const MetricPoint& p, std::size_t edge) -> std::optional<Rational> {
        if (p.edge == edge) return p.coords[0];
        auto v = vertex_of(p);
        if (!v) return std::nullopt;
        if (edges_[edge].from == *v) return Rational(0);
        if (edges_[edge].to == *v) return Rational(1);
        return std::nullopt;
      };
      for (std::size_t edge : {a.edge, b.edge}) {
        auto pa = position_on(a, edge);
        auto pb = position_on(b, edge);
        if (pa && pb) return MetricPoint{{lerp(*pa, *pb)}, edge};
      }
      throw DomainError("graph path segment does not stay on one edge");
    }
  }
  return a;
}

nlohmann::json MetricSpace::to_json() const {
  nlohmann::json j;
  switch (kind_) {
    case Kind::euclidean:
      j["kind"] = "euclidean";
      j["dimension"] = dimension_;
      break;
    case Kind::circle:
      j["kind"] = "circle";
      break;
    case Kind::graph: {
      j["kind"] = "graph";
      j["vertex_count"] = vertex_count_;
      nlohmann::json edges = nlohmann::json::array();
      for (const GraphEdge& e : edges_) edges.push_back({e.from, e.to, to_string(e.length)});
      j["edges"] = edges;
      break;
    }
  }
  return j;
}

MetricSpace MetricSpace::from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    const std::string tag = j.get<std::string>();
    if (tag == "circle") return circle();
    if (tag.rfind("euclidean", 0) == 0) {
      auto colon = tag.find(':');
      return euclidean(colon == std::string::npos ? 1 : std::stoul(tag.substr(colon + 1)));
    }
    throw DomainError("unknown metric space '" + tag + "'");
  }
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "circle") return circle();
  if (kind == "euclidean") return euclidean(j.value("dimension", std::size_t{1}));
  if (kind == "graph") {
    std::vector<GraphEdge> edges;
    for (const auto& e : j.at("edges")) {
      GraphEdge edge{e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(), 1};
      if (e.size() > 2) edge.length = e.at(2).is_string() ? parse_rational(e.at(2).get<std::string>()) : Rational(e.at(2).get<long>());
      edges.push_back(edge);
    }
    return graph(j.at("vertex_count").get<std::size_t>(), std::move(edges));
  }
  throw DomainError("unknown metric space kind '" + kind + "'");
}

namespace {

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw DomainError("expected a rational literal \"p/q\"");
}

}  // namespace

nlohmann::json MetricSpace::point_to_json(const MetricPoint& p) const {
  switch (kind_) {
    case Kind::circle: return to_string(p.coords[0]);
    case Kind::graph: return nlohmann::json{{"edge", p.edge}, {"t", to_string(p.coords[0])}};
    case Kind::euclidean: {
      nlohmann::json arr = nlohmann::json::array();
      for (const Rational& c : p.coords) arr.push_back(to_string(c));
      return arr;
    }
  }
  return {};
}

MetricPoint MetricSpace::point_from_json(const nlohmann::json& j) const {
  MetricPoint p;
  switch (kind_) {
    case Kind::circle:
      p.coords = {rational_from_json(j)};
      break;
    case Kind::graph:
      if (j.contains("vertex")) return vertex(j.at("vertex").get<std::size_t>());
      p.edge = j.at("edge").get<std::size_t>();
      p.coords = {rational_from_json(j.at("t"))};
      break;
    case Kind::euclidean:
      if (j.is_array()) {
        for (const auto& c : j) p.coords.push_back(rational_from_json(c));
      } else {
        p.coords = {rational_from_json(j)};
      }
      break;
  }
  check(p);
  return p;
}

std::string MetricSpace::format(const MetricPoint& p) const {
  switch (kind_) {
    case Kind::circle: return to_string(p.coords[0]);
    case Kind::graph: return "e" + std::to_string(p.edge) + "@" + to_string(p.coords[0]);
    case Kind::euclidean: {
      std::string out = "(";
      for (std::size_t i = 0; i < p.coords.size(); ++i) out += (i ? ", " : "") + to_string(p.coords[i]);
      return out + ")";
    }
  }
  return "";
}

}  // namespace intertwine
