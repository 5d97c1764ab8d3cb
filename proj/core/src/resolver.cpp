#include "intertwine/resolver.hpp"

#include <algorithm>
#include <map>

#include "intertwine/error.hpp"

namespace intertwine {
namespace {

// next[j][i]: strand indices in interval j + 1 reachable from strand i of interval j.
std::vector<std::vector<std::vector<std::size_t>>> successors(const BranchingDiagram& d) {
  std::vector<std::vector<std::vector<std::size_t>>> next(d.intervals.size());
  for (std::size_t j = 0; j + 1 < d.intervals.size(); ++j) {
    std::map<std::string, std::size_t> after;
    for (std::size_t i = 0; i < d.intervals[j + 1].size(); ++i) after[d.intervals[j + 1][i].id] = i;
    next[j].resize(d.intervals[j].size());
    for (std::size_t i = 0; i < d.intervals[j].size(); ++i) {
      for (const MeetingGroup& g : d.events[j]) {
        if (std::find(g.incoming.begin(), g.incoming.end(), d.intervals[j][i].id) == g.incoming.end()) continue;
        for (const std::string& id : g.outgoing) next[j][i].push_back(after.at(id));
      }
      std::sort(next[j][i].begin(), next[j][i].end());
    }
  }
  return next;
}

std::size_t strand_row(const BranchingDiagram& d, std::size_t interval, std::size_t index) {
  std::size_t row = index;
  for (std::size_t j = 0; j < interval; ++j) row += d.intervals[j].size();
  return row;
}

}  // namespace

std::vector<Route> enumerate_routes(const BranchingDiagram& d, const RouteOptions& options) {
  check(d);
  auto next = successors(d);
  std::vector<Route> routes;
  Route current;
  auto extend = [&](auto&& self, std::size_t j, std::size_t i) -> void {
    current.push_back(i);
    if (j + 1 == d.intervals.size()) {
      if (routes.size() >= options.route_cap) {
        throw BudgetExceeded("diagram '" + d.name + "' has more than " + std::to_string(options.route_cap) +
                             " routes; raise the route cap or split the diagram");
      }
      routes.push_back(current);
    } else {
      for (std::size_t k : next[j][i]) self(self, j + 1, k);
    }
    current.pop_back();
  };
  for (std::size_t i = 0; i < d.intervals[0].size(); ++i) extend(extend, 0, i);
  return routes;
}

std::string route_label(const BranchingDiagram& d, const Route& route) {
  std::string out;
  for (std::size_t j = 0; j < route.size(); ++j) out += (j ? "→" : "") + d.intervals[j][route[j]].id;
  return out;
}

Vector strand_weights(const BranchingDiagram& d) {
  Vector b;
  for (const auto& interval : d.intervals) {
    for (const Strand& s : interval) b.push_back(s.weight);
  }
  return b;
}

Matrix constraint_matrix(const BranchingDiagram& d, const std::vector<Route>& routes) {
  std::size_t rows = 0;
  for (const auto& interval : d.intervals) rows += interval.size();
  Matrix a(rows, routes.size());
  for (std::size_t r = 0; r < routes.size(); ++r) {
    for (std::size_t j = 0; j < routes[r].size(); ++j) a(strand_row(d, j, routes[r][j]), r) = 1;
  }
  return a;
}

std::string check_resolver(const BranchingDiagram& d, const Resolver& resolver) {
  Vector marginal(strand_weights(d).size());
  Rational total = 0;
  auto next = successors(d);
  for (const auto& [route, w] : resolver.weights) {
    if (w <= 0) return "route " + route_label(d, route) + " has nonpositive weight";
    if (route.size() != d.intervals.size()) return "route has the wrong length";
    for (std::size_t j = 0; j < route.size(); ++j) {
      if (route[j] >= d.intervals[j].size()) return "route strand index out of range";
      if (j > 0 && !std::binary_search(next[j - 1][route[j - 1]].begin(), next[j - 1][route[j - 1]].end(), route[j])) {
        return "route " + route_label(d, route) + " jumps between meeting groups";
      }
      marginal[strand_row(d, j, route[j])] += w;
    }
    total += w;
  }
  if (total != 1) return "resolver weights sum to " + to_string(total);
  if (marginal != strand_weights(d)) return "resolver violates a strand marginal";
  return "";
}

Resolver markov_resolver(const BranchingDiagram& d, const std::vector<Route>& routes) {
  // Weight flowing out of each meeting group, keyed by (event, incoming strand index).
  std::vector<std::map<std::size_t, Rational>> group_mass(d.events.size());
  for (std::size_t e = 0; e < d.events.size(); ++e) {
    for (const MeetingGroup& g : d.events[e]) {
      Rational mass = 0;
      for (const std::string& id : g.outgoing) mass += d.intervals[e + 1][d.locate(id).second].weight;
      for (const std::string& id : g.incoming) group_mass[e][d.locate(id).second] = mass;
    }
  }
  Resolver out;
  for (const Route& route : routes) {
    Rational w = d.intervals[0][route[0]].weight;
    for (std::size_t j = 1; j < route.size(); ++j) w *= d.intervals[j][route[j]].weight / group_mass[j - 1].at(route[j - 1]);
    out.weights.emplace_back(route, w);
  }
  return out;
}

namespace {

// Depth-first search over column subsets with incremental independence
// tests; each independent subset whose unique solution is positive is a vertex.
struct VertexSearch {
  const FieldSpec field = FieldSpec::rationals();
  const Matrix& a;
  const Vector& b;
  std::size_t limit;
  std::vector<std::size_t> chosen;
  std::vector<std::vector<std::size_t>> found;

  bool independent(const std::vector<std::size_t>& cols) const {
    std::vector<Vector> columns;
    for (std::size_t c : cols) columns.push_back(a.column(c));
    return rank(field, Matrix::from_columns(a.rows(), columns)) == cols.size();
  }

  void visit(std::size_t start) {
    if (!chosen.empty()) {
      std::vector<Vector> columns;
      for (std::size_t c : chosen) columns.push_back(a.column(c));
      if (auto x = solve(field, Matrix::from_columns(a.rows(), columns), b)) {
        if (std::all_of(x->begin(), x->end(), [](const Rational& v) { return v > 0; })) found.push_back(chosen);
        // Adding columns to a feasible independent set cannot give another
        // positive solution on a larger support.
        return;
      }
    }
    if (chosen.size() == limit) return;
    for (std::size_t c = start; c < a.cols(); ++c) {
      chosen.push_back(c);
      if (independent(chosen)) visit(c + 1);
      chosen.pop_back();
    }
  }
};

}  // namespace

ResolverEnumeration enumerate_resolvers(const BranchingDiagram& d, std::size_t n, const RouteOptions& options) {
  ResolverEnumeration out;
  out.routes = enumerate_routes(d, options);
  Matrix a = constraint_matrix(d, out.routes);
  Vector b = strand_weights(d);
  const std::size_t r = rank(FieldSpec::rationals(), a);
  out.polytope_dimension = out.routes.size() - r;

  VertexSearch search{FieldSpec::rationals(), a, b, std::min(n, r), {}, {}};
  search.visit(0);
  for (const auto& support : search.found) {
    std::vector<Vector> columns;
    for (std::size_t c : support) columns.push_back(a.column(c));
    Vector x = *solve(FieldSpec::rationals(), Matrix::from_columns(a.rows(), columns), b);
    Resolver resolver;
    for (std::size_t i = 0; i < support.size(); ++i) resolver.weights.emplace_back(out.routes[support[i]], x[i]);
    out.vertices.push_back(std::move(resolver));
  }
  std::sort(out.vertices.begin(), out.vertices.end(), [](const Resolver& x, const Resolver& y) {
    return std::lexicographical_compare(x.weights.begin(), x.weights.end(), y.weights.begin(), y.weights.end(),
                                        [](const auto& p, const auto& q) {
                                          if (p.first != q.first) return p.first < q.first;
                                          return p.second < q.second;
                                        });
  });
  return out;
}

std::size_t min_support(const BranchingDiagram& d, const RouteOptions& options) {
  std::vector<Route> routes = enumerate_routes(d, options);
  const std::size_t r = rank(FieldSpec::rationals(), constraint_matrix(d, routes));
  for (std::size_t n = 1; n <= r; ++n) {
    if (!enumerate_resolvers(d, n, options).vertices.empty()) return n;
  }
  throw DomainError("diagram '" + d.name + "' has no resolver");
}

MetricPoint route_position(const BranchingDiagram& d, const Route& route, const Rational& t) {
  const std::size_t j = d.interval_at(t);
  return strand_position(d, j, route[j], t);
}

std::vector<FiniteMeasure> pushforward(const Resolver& resolver, const BranchingDiagram& d, const Vector& sample_times) {
  if (!d.realization) throw DomainError("pushforward needs a realized diagram");
  std::vector<FiniteMeasure> out;
  for (const Rational& t : sample_times) {
    std::vector<Atom> atoms;
    for (const auto& [route, w] : resolver.weights) atoms.push_back({route_position(d, route, t), w});
    out.emplace_back(d.realization->space, std::move(atoms));
  }
  return out;
}

}  // namespace intertwine
