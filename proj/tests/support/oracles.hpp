#pragma once

// Independent reference computations used by the unit tests.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <vector>

#include "intertwine/complex.hpp"
#include "intertwine/diagram.hpp"
#include "intertwine/measure.hpp"
#include "intertwine/resolver.hpp"

namespace oracle {

using namespace intertwine;

inline std::size_t float_rank(std::vector<std::vector<double>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t best = rank;
    for (std::size_t r = rank; r < rows; ++r) {
      if (std::abs(m[r][c]) > std::abs(m[best][c])) best = r;
    }
    if (std::abs(m[best][c]) < 1e-9) continue;
    std::swap(m[best], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const double f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Rational Betti numbers from floating-point ranks of simplicial boundary maps.
inline std::vector<std::size_t> betti_by_boundaries(const SimplicialComplex& k) {
  const std::size_t top = k.dimension();
  std::vector<std::size_t> ranks(top + 2, 0);  // ranks[d] = rank of boundary C_d -> C_{d-1}
  for (std::size_t d = 1; d <= top; ++d) {
    const auto& lower = k.faces(d - 1);
    const auto& upper = k.faces(d);
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < lower.size(); ++i) index[std::vector<std::size_t>(lower[i].begin(), lower[i].end())] = i;
    std::vector<std::vector<double>> m(lower.size(), std::vector<double>(upper.size(), 0.0));
    for (std::size_t j = 0; j < upper.size(); ++j) {
      for (std::size_t drop = 0; drop < upper[j].size(); ++drop) {
        std::vector<std::size_t> face;
        for (std::size_t v = 0; v < upper[j].size(); ++v) {
          if (v != drop) face.push_back(upper[j][v]);
        }
        m[index.at(face)][j] = drop % 2 == 0 ? 1.0 : -1.0;
      }
    }
    ranks[d] = float_rank(m);
  }
  std::vector<std::size_t> betti;
  for (std::size_t d = 0; d <= top; ++d) betti.push_back(k.faces(d).size() - ranks[d] - ranks[d + 1]);
  return betti;
}

/// zcl_m(S^k; Q): m - 1 for odd k, m for even k.
inline std::size_t sphere_zcl(std::size_t k, std::size_t m) { return k % 2 == 1 ? m - 1 : m; }

/// Sign of (a (x) b)(a' (x) b') relative to aa' (x) bb'.
inline int koszul_sign(std::size_t deg_b, std::size_t deg_a_prime) { return (deg_b * deg_a_prime) % 2 == 0 ? 1 : -1; }

inline double hausdorff(const MetricSpace& space, const FiniteSet& a, const FiniteSet& b) {
  auto directed = [&](const FiniteSet& x, const FiniteSet& y) {
    double worst = 0;
    for (const auto& p : x) {
      double best = INFINITY;
      for (const auto& q : y) best = std::min(best, space.distance(p, q));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

/// Strand marginals of a resolver, summed route by route.
inline std::map<std::string, Rational> marginals(const BranchingDiagram& d, const Resolver& r) {
  std::map<std::string, Rational> out;
  for (const auto& [route, weight] : r.weights) {
    for (std::size_t j = 0; j < route.size(); ++j) out[d.strand(j, route[j]).id] += weight;
  }
  return out;
}

/// True iff every consecutive pair of strands on each route shares a meeting group.
inline bool routes_follow_groups(const BranchingDiagram& d, const Resolver& r) {
  for (const auto& [route, weight] : r.weights) {
    for (std::size_t j = 0; j + 1 < route.size(); ++j) {
      const std::string& from = d.strand(j, route[j]).id;
      const std::string& to = d.strand(j + 1, route[j + 1]).id;
      bool found = false;
      for (const MeetingGroup& g : d.events[j]) {
        const bool in = std::find(g.incoming.begin(), g.incoming.end(), from) != g.incoming.end();
        const bool out = std::find(g.outgoing.begin(), g.outgoing.end(), to) != g.outgoing.end();
        found = found || (in && out);
      }
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace oracle
