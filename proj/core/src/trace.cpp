#include "intertwine/trace.hpp"

#include <algorithm>

#include "intertwine/error.hpp"

namespace intertwine {

namespace {

bool atom_less(const Atom& a, const Atom& b) {
  if (!(a.point == b.point)) return a.point < b.point;
  return a.weight < b.weight;
}

}  // namespace

std::vector<Atom> weighted_configuration(const Resolver& resolver, const BranchingDiagram& diagram, const Rational& t) {
  std::vector<Atom> out;
  for (const auto& [route, w] : resolver.weights) out.push_back({route_position(diagram, route, t), w});
  std::sort(out.begin(), out.end(), atom_less);
  return out;
}

std::vector<SymmetricTracePoint> symmetric_trace(const Resolver& resolver, const BranchingDiagram& diagram,
                                                 const Vector& sample_times) {
  if (resolver.support_size() > 2) throw DomainError("symmetric trace is defined for resolvers with support at most 2");
  if (resolver.support_size() == 0) throw DomainError("empty resolver");
  std::vector<SymmetricTracePoint> out;
  for (const Rational& t : sample_times) {
    SymmetricTracePoint point;
    point.entries = weighted_configuration(resolver, diagram, t);
    for (const Atom& a : point.entries) point.sp2.push_back(a.point);
    if (point.sp2.size() == 1) point.sp2.push_back(point.sp2.front());
    std::sort(point.sp2.begin(), point.sp2.end());
    if (point.entries.size() == 1 || point.entries[0].point == point.entries[1].point) {
      point.merged = true;
      point.entries = {Atom{point.sp2.front(), Rational(1)}};
    }
    out.push_back(std::move(point));
  }
  return out;
}

Support3Report support3_report(const BranchingDiagram& diagram, const std::vector<Resolver>& resolvers,
                               const Vector& sample_times) {
  Support3Report report;
  for (const Resolver& resolver : resolvers) {
    std::vector<FiniteMeasure> measures = pushforward(resolver, diagram, sample_times);
    std::vector<std::vector<Atom>> configs;
    for (const Rational& t : sample_times) configs.push_back(weighted_configuration(resolver, diagram, t));
    for (std::size_t i = 0; i < sample_times.size() && !report.non_injective; ++i) {
      for (std::size_t j = i + 1; j < sample_times.size(); ++j) {
        if (measures[i] == measures[j] && configs[i] != configs[j]) {
          report.non_injective = true;
          report.collision_times = {sample_times[i], sample_times[j]};
          break;
        }
      }
    }
  }
  for (const Rational& t : sample_times) {
    for (std::size_t a = 0; a + 1 < resolvers.size() && !report.resolver_dependent; ++a) {
      std::vector<Atom> first = weighted_configuration(resolvers[a], diagram, t);
      for (std::size_t b = a + 1; b < resolvers.size(); ++b) {
        if (first != weighted_configuration(resolvers[b], diagram, t)) {
          report.resolver_dependent = true;
          report.dependence_time = t;
          break;
        }
      }
    }
    if (report.resolver_dependent) break;
  }
  return report;
}

Vector probe_times(const BranchingDiagram& diagram) {
  Vector out = uniform_times(101);
  for (const Rational& t : diagram.event_times) out.push_back(t);
  if (diagram.realization) {
    for (const auto& [id, path] : diagram.realization->paths) out.insert(out.end(), path.times.begin(), path.times.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool support3_counterexample_check(const BranchingDiagram& diagram, const std::vector<Resolver>& resolvers) {
  return support3_report(diagram, resolvers, probe_times(diagram)).triggered();
}

std::vector<ContinuityRow> support_step_report(const MetricSpace& space, const MeasureSampler& sampler, const Vector& dts) {
  std::vector<ContinuityRow> rows;
  for (const Rational& dt : dts) {
    if (dt <= 0 || dt > 1) throw DomainError("sampling step must lie in (0, 1]");
    Rational steps_q = 1 / dt;
    if (steps_q.get_den() != 1) throw DomainError("sampling step must divide 1");
    const unsigned long steps = steps_q.get_num().get_ui();
    ContinuityRow row{dt, 0, 0};
    FiniteSet previous = support(sampler(Rational(0)));
    for (unsigned long k = 1; k <= steps; ++k) {
      Rational t = dt * k;
      FiniteSet current = support(sampler(t));
      const double step = hausdorff_distance(space, previous, current);
      if (step > row.max_step) {
        row.max_step = step;
        row.at = dt * (k - 1);
      }
      previous = std::move(current);
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<ContinuityRow> support_continuity_report(const Resolver& resolver, const BranchingDiagram& diagram,
                                                     const Vector& dts) {
  if (!diagram.realization) throw DomainError("continuity report needs a realized diagram");
  MeasureSampler sampler = [&](const Rational& t) { return pushforward(resolver, diagram, {t}).front(); };
  return support_step_report(diagram.realization->space, sampler, dts);
}

MeasureSampler weight_transfer_path(const MetricSpace& space, const MetricPoint& p, const MetricPoint& q) {
  return [space, p, q](const Rational& t) {
    if (t >= 1) return FiniteMeasure::dirac(space, q);
    Rational half(1, 2);
    Rational wp = half - t / 2;
    Rational wq = half + t / 2;
    return FiniteMeasure(space, {Atom{p, wp}, Atom{q, wq}});
  };
}

}  // namespace intertwine
