#include "intertwine/navigate.hpp"

#include "intertwine/error.hpp"

namespace intertwine {

TimestampScheme TimestampScheme::uniform(std::size_t path_count) {
  if (path_count == 0) throw DomainError("need at least one path");
  TimestampScheme scheme;
  for (std::size_t i = 1; i < path_count; ++i) {
    Rational a(static_cast<long>(path_count), static_cast<long>(i));
    a.canonicalize();
    scheme.rates.push_back(a);
  }
  return scheme;
}

void TimestampScheme::check() const {
  for (std::size_t i = 0; i < rates.size(); ++i) {
    if (rates[i] <= 1) throw DomainError("timestamp rates must exceed 1");
    if (i > 0 && rates[i] >= rates[i - 1]) throw DomainError("timestamp rates must decrease strictly");
  }
}

Vector TimestampScheme::breakpoints() const {
  Vector out;
  for (const Rational& a : rates) out.push_back(1 / a);
  return out;
}

namespace {

// Affine map (scale, shift) carrying [0, 1] onto the time slot of path i.
std::pair<Rational, Rational> slot(const TimestampScheme& scheme, std::size_t i) {
  const std::size_t m = scheme.rates.size() + 1;
  Rational lo = i == 0 ? Rational(0) : Rational(1 / scheme.rates[i - 1]);
  Rational hi = i + 1 == m ? Rational(1) : Rational(1 / scheme.rates[i]);
  return {hi - lo, lo};
}

}  // namespace

SampledPath theta_concat(const MetricSpace& space, const std::vector<SampledPath>& paths, const TimestampScheme& scheme) {
  if (paths.empty()) throw DomainError("nothing to concatenate");
  if (scheme.rates.size() + 1 != paths.size()) {
    throw DomainError("timestamp scheme has " + std::to_string(scheme.rates.size()) + " rates for " +
                      std::to_string(paths.size()) + " paths");
  }
  scheme.check();
  for (std::size_t i = 0; i < paths.size(); ++i) {
    paths[i].check(space);
    if (paths[i].start() != 0 || paths[i].end() != 1) throw DomainError("concatenated paths must be parametrized by [0, 1]");
    if (i > 0 && !(space.canonical(paths[i - 1].points.back()) == space.canonical(paths[i].points.front()))) {
      throw DomainError("path " + std::to_string(i) + " ends where path " + std::to_string(i + 1) + " does not start");
    }
  }
  SampledPath out;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    auto [scale, shift] = slot(scheme, i);
    SampledPath piece = paths[i].affine_time(scale, shift);
    std::size_t from = 0;
    if (i > 0) {
      // Keep lifts continuous on the circle: shift the piece to start on the previous end.
      if (space.kind() == MetricSpace::Kind::circle) {
        Rational offset = out.points.back().coords[0] - piece.points[0].coords[0];
        for (MetricPoint& p : piece.points) p.coords[0] += offset;
      }
      from = 1;
    }
    for (std::size_t k = from; k < piece.times.size(); ++k) {
      out.times.push_back(piece.times[k]);
      out.points.push_back(piece.points[k]);
    }
  }
  return out;
}

Vector join_weights(std::size_t m, const Rational& t) {
  if (m < 2) throw DomainError("join weights need m >= 2");
  Vector nodes;
  for (std::size_t i = 0; i < m; ++i) {
    Rational node(static_cast<long>(i), static_cast<long>(m - 1));
    node.canonicalize();
    nodes.push_back(node);
  }
  auto z = [&](std::size_t j, const Rational& s) {
    Rational product = 1;
    for (std::size_t i = 0; i < m; ++i) {
      if (i != j) product *= s - nodes[i];
    }
    return product;
  };
  Vector y(m);
  Rational total = 0;
  for (std::size_t j = 0; j < m; ++j) {
    y[j] = z(j, t) / z(j, nodes[j]);
    total += y[j] * y[j];
  }
  Vector w(m);
  for (std::size_t j = 0; j < m; ++j) w[j] = y[j] * y[j] / total;
  return w;
}

namespace {

Vector default_times(const Vector& sample_times) { return sample_times.empty() ? uniform_times(101) : sample_times; }

Navigation finish(BranchingDiagram diagram, const Vector& sample_times) {
  check(diagram);
  Navigation nav{std::move(diagram), default_times(sample_times), {}};
  for (const Rational& t : nav.times) nav.measures.push_back(measure_at(nav.diagram, t));
  return nav;
}

BranchingDiagram circle_diagram(const Rational& x, const Rational& y) {
  const MetricSpace space = MetricSpace::circle();
  Rational ccw = fractional_part(y - x);
  Rational cw = fractional_part(x - y);
  BranchingDiagram d;
  d.name = "circle-navigation";
  d.event_times = {Rational(0), Rational(1)};
  d.intervals = {{Strand{"ccw", Rational(1, 2)}, Strand{"cw", Rational(1, 2)}}};
  Realization r{space, {}};
  r.paths.emplace("ccw", SampledPath{{Rational(0), Rational(1)}, {space.turns(x), MetricPoint{{x + ccw}, 0}}});
  r.paths.emplace("cw", SampledPath{{Rational(0), Rational(1)}, {space.turns(x), MetricPoint{{x - cw}, 0}}});
  d.realization = std::move(r);
  return d;
}

}  // namespace

Navigation circle_navigate(const Rational& x, const Rational& y, const Vector& sample_times) {
  return finish(circle_diagram(fractional_part(x), fractional_part(y)), sample_times);
}

PairNavigator circle_pair_navigator() {
  return [](const MetricPoint& x, const MetricPoint& y) { return circle_diagram(x.coords.at(0), y.coords.at(0)); };
}

Navigation sequential_compose(const MetricSpace& space, const PairNavigator& nav2, const std::vector<MetricPoint>& points,
                              const Vector& sample_times) {
  if (points.size() < 2) throw DomainError("sequential navigation needs at least two points");
  const std::size_t segments = points.size() - 1;
  const TimestampScheme scheme = TimestampScheme::uniform(segments);

  BranchingDiagram out;
  out.name = "sequential-navigation";
  out.event_times = {Rational(0)};
  Realization realization{space, {}};
  for (std::size_t s = 0; s < segments; ++s) {
    BranchingDiagram seg = nav2(space.canonical(points[s]), space.canonical(points[s + 1]));
    check(seg);
    if (!seg.realization) throw DomainError("pair navigation must produce a realized diagram");
    if (!measure_at(seg, 0).is_dirac() || !measure_at(seg, 1).is_dirac()) {
      throw DomainError("pair navigation must start and end at Dirac measures");
    }
    auto [scale, shift] = slot(scheme, s);
    const std::string prefix = "s" + std::to_string(s + 1) + ".";
    auto renamed = [&prefix](const std::vector<std::string>& ids) {
      std::vector<std::string> out_ids;
      for (const std::string& id : ids) out_ids.push_back(prefix + id);
      return out_ids;
    };
    if (s > 0) {
      MeetingGroup junction;
      for (const Strand& st : out.intervals.back()) junction.incoming.push_back(st.id);
      for (const Strand& st : seg.intervals.front()) junction.outgoing.push_back(prefix + st.id);
      out.events.push_back({junction});
    }
    for (std::size_t e = 1; e < seg.event_times.size(); ++e) out.event_times.push_back(scale * seg.event_times[e] + shift);
    for (const auto& interval : seg.intervals) {
      std::vector<Strand> strands;
      for (const Strand& st : interval) strands.push_back({prefix + st.id, st.weight});
      out.intervals.push_back(std::move(strands));
    }
    for (const auto& groups : seg.events) {
      std::vector<MeetingGroup> mapped;
      for (const MeetingGroup& g : groups) mapped.push_back({renamed(g.incoming), renamed(g.outgoing)});
      out.events.push_back(std::move(mapped));
    }
    for (const auto& [id, path] : seg.realization->paths) realization.paths.emplace(prefix + id, path.affine_time(scale, shift));
  }
  out.realization = std::move(realization);
  return finish(merge_coincident_strands(out), sample_times);
}

}  // namespace intertwine
