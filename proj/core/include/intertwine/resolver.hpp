#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "intertwine/diagram.hpp"
#include "intertwine/linalg.hpp"

namespace intertwine {

/// One strand index per interval; consecutive strands share a meeting group.
using Route = std::vector<std::size_t>;

struct RouteOptions {
  std::size_t route_cap = 1'000'000;
};

/// All routes in lexicographic order. Throws BudgetExceeded past the cap.
std::vector<Route> enumerate_routes(const BranchingDiagram& diagram, const RouteOptions& options = {});

std::string route_label(const BranchingDiagram& diagram, const Route& route);

/// Route -> positive weight, sorted by route.
struct Resolver {
  std::vector<std::pair<Route, Rational>> weights;

  std::size_t support_size() const { return weights.size(); }
  friend bool operator==(const Resolver&, const Resolver&) = default;
};

/// Diagnostic for the first violated resolver invariant, or empty.
std::string check_resolver(const BranchingDiagram& diagram, const Resolver& resolver);

/// Marginal constraints: rows are strands (interval by interval), columns routes.
Matrix constraint_matrix(const BranchingDiagram& diagram, const std::vector<Route>& routes);
Vector strand_weights(const BranchingDiagram& diagram);

/// Resolver putting weight on every route: first strand weight times the
/// split fraction at each event.
Resolver markov_resolver(const BranchingDiagram& diagram, const std::vector<Route>& routes);

struct ResolverEnumeration {
  std::vector<Route> routes;
  /// Vertices of the resolver polytope with support <= n, in lexicographic order.
  std::vector<Resolver> vertices;
  /// Dimension of the whole polytope; 0 means the vertices are all resolvers.
  std::size_t polytope_dimension = 0;
};

ResolverEnumeration enumerate_resolvers(const BranchingDiagram& diagram, std::size_t n, const RouteOptions& options = {});

/// Least support of any resolver (attained at a vertex).
std::size_t min_support(const BranchingDiagram& diagram, const RouteOptions& options = {});

/// Position of a route at time t.
MetricPoint route_position(const BranchingDiagram& diagram, const Route& route, const Rational& t);

/// Sum over routes of weight * delta(route position at t), per sample time.
std::vector<FiniteMeasure> pushforward(const Resolver& resolver, const BranchingDiagram& diagram, const Vector& sample_times);

}  // namespace intertwine
