#include "intertwine/measure.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "intertwine/error.hpp"

namespace intertwine {

FiniteMeasure::FiniteMeasure(const MetricSpace& space, std::vector<Atom> atoms) {
  std::map<MetricPoint, Rational> merged;
  Rational total = 0;
  for (Atom& a : atoms) {
    if (a.weight < 0) throw DomainError("measure has a negative weight");
    total += a.weight;
    if (a.weight == 0) continue;
    merged[space.canonical(a.point)] += a.weight;
  }
  if (total != 1) throw DomainError("measure weights sum to " + to_string(total) + ", not 1");
  for (auto& [p, w] : merged) atoms_.push_back(Atom{p, w});
}

FiniteMeasure FiniteMeasure::dirac(const MetricSpace& space, const MetricPoint& x) {
  return FiniteMeasure(space, {Atom{x, Rational(1)}});
}

FiniteSet support(const FiniteMeasure& mu) {
  FiniteSet out;
  for (const Atom& a : mu.atoms()) out.push_back(a.point);
  return out;
}

FiniteSet make_finite_set(const MetricSpace& space, std::vector<MetricPoint> points) {
  for (MetricPoint& p : points) p = space.canonical(p);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

double lp_distance(const MetricSpace& space, const FiniteMeasure& mu, const FiniteMeasure& nu, const LpOptions& options) {
  FiniteSet points = support(mu);
  for (const Atom& a : nu.atoms()) points.push_back(a.point);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const std::size_t n = points.size();
  if (n > options.support_cap) {
    throw DomainError("joint support of " + std::to_string(n) + " points exceeds the cap of " +
                      std::to_string(options.support_cap));
  }
  if (mu == nu) return 0;

  auto index_of = [&](const MetricPoint& p) {
    return static_cast<std::size_t>(std::lower_bound(points.begin(), points.end(), p) - points.begin());
  };
  std::vector<Rational> wmu(n), wnu(n);
  for (const Atom& a : mu.atoms()) wmu[index_of(a.point)] = a.weight;
  for (const Atom& a : nu.atoms()) wnu[index_of(a.point)] = a.weight;

  std::vector<double> dist(n * n);
  std::vector<double> radii{0.0};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      dist[i * n + j] = space.distance(points[i], points[j]);
      if (i < j) radii.push_back(dist[i * n + j]);
    }
  }
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());

  const std::size_t subsets = std::size_t{1} << n;
  std::vector<Rational> mass_mu(subsets), mass_nu(subsets);
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    const std::size_t low = static_cast<std::size_t>(__builtin_ctzll(mask));
    mass_mu[mask] = mass_mu[mask & (mask - 1)] + wmu[low];
    mass_nu[mask] = mass_nu[mask & (mask - 1)] + wnu[low];
  }

  std::vector<std::size_t> ball(n);
  std::vector<std::size_t> hood(subsets);
  for (std::size_t k = 0; k < radii.size(); ++k) {
    const double r = radii[k];
    for (std::size_t i = 0; i < n; ++i) {
      ball[i] = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (dist[i * n + j] <= r) ball[i] |= std::size_t{1} << j;
      }
    }
    Rational defect = 0;
    for (std::size_t mask = 1; mask < subsets; ++mask) {
      const std::size_t low = static_cast<std::size_t>(__builtin_ctzll(mask));
      hood[mask] = hood[mask & (mask - 1)] | ball[low];
      Rational a = mass_mu[mask] - mass_nu[hood[mask]];
      Rational b = mass_nu[mask] - mass_mu[hood[mask]];
      if (a > defect) defect = a;
      if (b > defect) defect = b;
    }
    const double candidate = std::max(r, to_double(defect));
    const double next = k + 1 < radii.size() ? radii[k + 1] : std::numeric_limits<double>::infinity();
    if (candidate < next) return candidate;
  }
  return 1.0;
}

double hausdorff_distance(const MetricSpace& space, const FiniteSet& a, const FiniteSet& b) {
  if (a.empty() || b.empty()) throw DomainError("Hausdorff distance of an empty set");
  auto directed = [&space](const FiniteSet& from, const FiniteSet& to) {
    double worst = 0;
    for (const MetricPoint& p : from) {
      double nearest = std::numeric_limits<double>::infinity();
      for (const MetricPoint& q : to) nearest = std::min(nearest, space.distance(p, q));
      worst = std::max(worst, nearest);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

std::string format(const MetricSpace& space, const FiniteMeasure& mu) {
  std::string out;
  for (const Atom& a : mu.atoms()) {
    if (!out.empty()) out += " + ";
    out += to_string(a.weight) + " δ[" + space.format(a.point) + "]";
  }
  return out;
}

}  // namespace intertwine
