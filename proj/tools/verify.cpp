#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "intertwine/complex.hpp"
#include "intertwine/diagram.hpp"
#include "intertwine/error.hpp"
#include "intertwine/facts_io.hpp"
#include "intertwine/navigate.hpp"
#include "intertwine/resolver.hpp"
#include "intertwine/ring.hpp"
#include "intertwine/trace.hpp"

namespace intertwine::verify {

namespace fs = std::filesystem;

namespace {

constexpr double kMetricTolerance = 2e-9;

GradedAlgebra complex_ring(const VerifyOptions& options, const std::string& name, const FieldSpec& field) {
  return cohomology_ring(load_complex(options.data_dir / "complexes" / (name + ".cx")), field);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep = ", ") {
  std::string out;
  for (const std::string& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

template <typename Fn>
CheckResult guarded(std::string id, std::string title, Fn&& body) {
  CheckResult result{std::move(id), std::move(title), false, ""};
  try {
    body(result);
  } catch (const std::exception& e) {
    result.pass = false;
    result.detail = std::string("exception: ") + e.what();
  }
  return result;
}

std::vector<FiniteMeasure> pushforward_at(const Resolver& r, const BranchingDiagram& d, const Vector& times) {
  return pushforward(r, d, times);
}

std::size_t all_routes(const BranchingDiagram& d) { return enumerate_routes(d).size(); }

}  // namespace

std::vector<fs::path> corpus_diagrams(const fs::path& data_dir) {
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(data_dir / "diagrams")) {
    if (entry.path().extension() == ".bd") out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

FactBase reproduction_base(const fs::path& data_dir, FactBase::Options options) {
  FactBase base(options);
  load_facts(base, data_dir / "facts" / "classical.facts");
  const std::vector<FieldSpec> fields = {FieldSpec::rationals(), FieldSpec::prime(2)};
  std::vector<fs::path> inputs;
  for (const char* sub : {"complexes", "rings"}) {
    for (const auto& entry : fs::directory_iterator(data_dir / sub)) inputs.push_back(entry.path());
  }
  std::sort(inputs.begin(), inputs.end());
  for (const fs::path& path : inputs) {
    for (const FieldSpec& field : fields) {
      if (path.extension() == ".cx") {
        const SimplicialComplex complex = load_complex(path);
        assert_ring_facts(base, complex.name(), cohomology_ring(complex, field), path.filename().string());
      } else if (path.extension() == ".ring") {
        GradedAlgebra ring = load_ring(path);
        if (ring.field() == field) assert_ring_facts(base, ring.name(), ring, path.filename().string());
      }
    }
  }
  base.propagate();
  return base;
}

CheckResult check_cup_lengths(const VerifyOptions& options) {
  return guarded("1", "cup lengths over Q", [&](CheckResult& r) {
    const std::vector<std::pair<std::string, std::size_t>> expected = {
        {"circle", 1}, {"sphere2", 1}, {"torus", 2}, {"genus2", 2}};
    r.pass = true;
    std::vector<std::string> parts;
    for (const auto& [name, want] : expected) {
      const std::size_t got = cup_length(complex_ring(options, name, FieldSpec::rationals()));
      parts.push_back(name + "=" + std::to_string(got));
      r.pass = r.pass && got == want;
    }
    r.detail = join(parts);
  });
}

CheckResult check_zero_divisor_cup_lengths(const VerifyOptions& options) {
  return guarded("2", "zero-divisor cup lengths over Q", [&](CheckResult& r) {
    const std::vector<std::pair<std::string, std::size_t>> expected = {
        {"circle", 1}, {"sphere2", 2}, {"wedge2circles", 2}, {"torus", 2}};
    r.pass = true;
    std::vector<std::string> parts;
    for (const auto& [name, want] : expected) {
      const std::size_t got = zero_divisor_cup_length(complex_ring(options, name, FieldSpec::rationals()), 2);
      parts.push_back(name + "=" + std::to_string(got));
      r.pass = r.pass && got == want;
    }
    r.detail = join(parts);
  });
}

CheckResult check_bounds(const VerifyOptions& options) {
  return guarded("3", "bounds engine values", [&](CheckResult& r) {
    const FactBase base = reproduction_base(options.data_dir);
    struct Want {
      std::string space;
      Invariant invariant;
      Interval interval;
      std::string rule;  // required rule at the root of the lower or upper trace
    };
    const std::vector<Want> wants = {
        {"torus", Invariant::icat(), {2, 2}, ""},
        {"genus2", Invariant::icat(), {2, 2}, ""},
        {"s2xs4", Invariant::icat(), {2, 2}, ""},
        {"s3xs3", Invariant::icat(), {2, 2}, ""},
        {"sphere2", Invariant::iTC(), {2, 2}, ""},
        {"circle", Invariant::iTC(), {1, 1}, ""},
        {"torus", Invariant::iTC(), {2, 2}, "R6"},
        {"circle", Invariant::iTC(3), {2, 2}, "R13"},
    };
    r.pass = true;
    std::vector<std::string> parts;
    for (const Want& w : wants) {
      const Derived d = base.derive(w.space, w.invariant);
      bool ok = d.interval == w.interval && base.replay(d.lower) && base.replay(d.upper);
      if (!w.rule.empty()) {
        ok = ok && ((d.lower && d.lower->rule == w.rule) || (d.upper && d.upper->rule == w.rule));
      }
      parts.push_back(w.invariant.name() + "(" + w.space + ")=" + format_interval(d.interval) + (ok ? "" : " (!)"));
      r.pass = r.pass && ok;
    }
    r.detail = join(parts);
  });
}

CheckResult check_higman(const VerifyOptions& options) {
  return guarded("4", "Higman separation", [&](CheckResult& r) {
    const FactBase base = reproduction_base(options.data_dir);
    const std::vector<Separation> separations = base.strict_separations();
    r.pass = true;
    std::vector<std::string> parts;
    for (std::size_t m = 2; m <= 5; ++m) {
      const Interval itc = base.interval("higman", Invariant::iTC(m));
      const Interval dtc = base.interval("higman", Invariant::dTC(m));
      const bool flagged = std::any_of(separations.begin(), separations.end(),
                                       [&](const Separation& s) { return s.space == "higman" && s.m == m; });
      const Value lo = static_cast<Value>(2 * (m - 1));
      const bool ok = itc == Interval{1, 1} && dtc == Interval{lo, kInfinity} && flagged;
      parts.push_back("m=" + std::to_string(m) + " iTC " + format_interval(itc) + " dTC " + format_interval(dtc));
      r.pass = r.pass && ok;
    }
    r.detail = join(parts);
  });
}

CheckResult check_resolver_counts(const VerifyOptions& options) {
  return guarded("5", "resolver counts", [&](CheckResult& r) {
    const fs::path dir = options.data_dir / "diagrams";
    const BranchingDiagram ex1 = load_diagram(dir / "example1.bd");
    const BranchingDiagram ex2 = load_diagram(dir / "example2.bd");
    const BranchingDiagram ex3 = load_diagram(dir / "example3.bd");
    const BranchingDiagram ex4 = load_diagram(dir / "example4.bd");
    bool weights_ok = true;
    auto enumerate = [&](const BranchingDiagram& d, std::size_t n) {
      ResolverEnumeration e = enumerate_resolvers(d, n);
      for (const Resolver& resolver : e.vertices) weights_ok = weights_ok && check_resolver(d, resolver).empty();
      return e;
    };
    const ResolverEnumeration e1n2 = enumerate(ex1, 2);
    const ResolverEnumeration e1n3 = enumerate(ex1, 3);
    const ResolverEnumeration e2n2 = enumerate(ex2, 2);
    const ResolverEnumeration e4n4 = enumerate(ex4, 4);
    const std::size_t ms2 = min_support(ex2);
    const std::size_t ms3 = min_support(ex3);
    r.pass = e1n2.vertices.size() == 2 && e1n3.vertices.size() == 2 && e1n2.polytope_dimension == 1 &&
             e2n2.vertices.empty() && ms2 == 3 && ms3 == 4 && e4n4.vertices.size() >= 12 && weights_ok;
    std::ostringstream out;
    out << "ex1 n=2:" << e1n2.vertices.size() << " n=3:" << e1n3.vertices.size() << " dim "
        << e1n2.polytope_dimension << ", ex2 n=2:" << e2n2.vertices.size() << " min " << ms2 << ", ex3 min " << ms3
        << ", ex4 n=4:" << e4n4.vertices.size();
    r.detail = out.str();
  });
}

CheckResult check_well_defined(const VerifyOptions& options) {
  return guarded("6", "pushforward independent of resolver", [&](CheckResult& r) {
    const Vector times = uniform_times(101);
    r.pass = true;
    std::vector<std::string> parts;
    for (const fs::path& path : corpus_diagrams(options.data_dir)) {
      const BranchingDiagram d = load_diagram(path);
      ResolverEnumeration e = enumerate_resolvers(d, all_routes(d));
      std::vector<Resolver> resolvers = e.vertices;
      resolvers.push_back(markov_resolver(d, e.routes));
      bool ok = true;
      std::vector<FiniteMeasure> reference;
      for (std::size_t i = 0; i < resolvers.size(); ++i) {
        if (!check_resolver(d, resolvers[i]).empty()) continue;  // the Markov product can fail on a diagram without resolvers
        std::vector<FiniteMeasure> measures = pushforward_at(resolvers[i], d, times);
        if (reference.empty()) reference = std::move(measures);
        else ok = ok && measures == reference;
      }
      if (!reference.empty()) {
        for (std::size_t k = 0; k < times.size(); ++k) ok = ok && reference[k] == measure_at(d, times[k]);
      }
      parts.push_back(d.name + ":" + std::to_string(e.vertices.size()) + (ok ? "" : " (!)"));
      r.pass = r.pass && ok;
    }
    r.detail = join(parts);
  });
}

CheckResult check_symmetric_trace(const VerifyOptions& options) {
  return guarded("7", "symmetric-trace dichotomy", [&](CheckResult& r) {
    r.pass = true;
    std::vector<std::string> parts;
    for (const fs::path& path : corpus_diagrams(options.data_dir)) {
      const BranchingDiagram d = load_diagram(path);
      const ResolverEnumeration e = enumerate_resolvers(d, 2);
      const Vector times = probe_times(d);
      bool ok = true;
      std::vector<SymmetricTracePoint> reference;
      for (const Resolver& resolver : e.vertices) {
        std::vector<SymmetricTracePoint> trace = symmetric_trace(resolver, d, times);
        if (reference.empty()) reference = std::move(trace);
        else ok = ok && trace == reference;
      }
      if (!e.vertices.empty()) parts.push_back(d.name + " invariant over " + std::to_string(e.vertices.size()));
      r.pass = r.pass && ok;
    }
    const BranchingDiagram counter = load_diagram(options.data_dir / "diagrams" / "notgeneral.bd");
    const bool triggered = support3_counterexample_check(counter, enumerate_resolvers(counter, 3).vertices);
    parts.push_back(std::string("notgeneral triggered=") + (triggered ? "true" : "false"));
    r.pass = r.pass && triggered;
    r.detail = join(parts);
  });
}

CheckResult check_support_continuity(const VerifyOptions& options) {
  return guarded("8", "support continuity", [&](CheckResult& r) {
    const BranchingDiagram d = load_diagram(options.data_dir / "diagrams" / "example1.bd");
    const Vector dts = {make_rational(1, 100), make_rational(1, 200)};
    const ResolverEnumeration e = enumerate_resolvers(d, 2);
    bool resolvable_ok = !e.vertices.empty();
    double coarse = 0, fine = 0;
    for (const Resolver& resolver : e.vertices) {
      const std::vector<ContinuityRow> rows = support_continuity_report(resolver, d, dts);
      coarse = rows[0].max_step;
      fine = rows[1].max_step;
      resolvable_ok = resolvable_ok && coarse > 0 && fine <= 0.5 * coarse * 1.1;
    }
    const MetricSpace circle = MetricSpace::circle();
    const std::vector<ContinuityRow> jump =
        support_step_report(circle, weight_transfer_path(circle, circle.turns(0), circle.turns(make_rational(1, 2))), dts);
    const bool jump_ok = jump[0].max_step >= 0.2 && jump[1].max_step >= 0.2 && jump[1].max_step >= 0.9 * jump[0].max_step;
    r.pass = resolvable_ok && jump_ok;
    std::ostringstream out;
    out << "example1 step " << coarse << " -> " << fine << ", unresolvable step " << jump[0].max_step << " -> "
        << jump[1].max_step;
    r.detail = out.str();
  });
}

CheckResult check_navigation(const VerifyOptions& options) {
  return guarded("9", "navigation formulas", [&](CheckResult& r) {
    std::mt19937_64 rng(options.seed);
    // join weights
    bool weights_ok = true;
    for (std::size_t m = 2; m <= 8; ++m) {
      for (std::size_t k = 0; k < 1000; ++k) {
        const Vector w = join_weights(m, make_rational(k, 999));
        Rational total = 0;
        for (const Rational& x : w) {
          weights_ok = weights_ok && x >= 0;
          total += x;
        }
        weights_ok = weights_ok && total == 1;
      }
      for (std::size_t i = 0; i < m; ++i) {
        const Vector w = join_weights(m, make_rational(i, m - 1));
        for (std::size_t j = 0; j < m; ++j) weights_ok = weights_ok && w[j] == (i == j ? 1 : 0);
      }
    }
    // theta concatenation
    const MetricSpace circle = MetricSpace::circle();
    std::uniform_int_distribution<int> step(-12, 12);
    bool theta_ok = true;
    for (std::size_t trial = 0; trial < 50; ++trial) {
      const std::size_t count = 2 + trial % 5;
      std::vector<SampledPath> paths;
      Rational at = make_rational(step(rng), 24);
      for (std::size_t i = 0; i < count; ++i) {
        const Rational mid = at + make_rational(step(rng), 24);
        const Rational end = mid + make_rational(step(rng), 24);
        paths.push_back({{0, make_rational(1, 2), 1}, {circle.turns(at), circle.turns(mid), circle.turns(end)}});
        at = end;
      }
      std::vector<TimestampScheme> schemes = {TimestampScheme::uniform(count)};
      Vector rates;
      Rational rate = 1;
      for (std::size_t i = 0; i + 1 < count; ++i) rate += make_rational(1 + static_cast<int>(rng() % 5), 3);
      for (std::size_t i = 0; i + 1 < count; ++i) {
        rates.push_back(rate);
        rate -= make_rational(1, 3 * static_cast<int>(count));
      }
      std::sort(rates.begin(), rates.end(), std::greater<>());
      schemes.push_back({rates});
      for (const TimestampScheme& scheme : schemes) {
        const SampledPath theta = theta_concat(circle, paths, scheme);
        Vector cuts = {0};
        for (const Rational& b : scheme.breakpoints()) cuts.push_back(b);
        cuts.push_back(1);
        for (std::size_t i = 0; i < count; ++i) {
          const Rational mid = (cuts[i] + cuts[i + 1]) / 2;
          theta_ok = theta_ok && theta.at(circle, cuts[i]) == paths[i].at(circle, 0) &&
                     theta.at(circle, cuts[i + 1]) == paths[i].at(circle, 1) &&
                     theta.at(circle, mid) == paths[i].at(circle, make_rational(1, 2));
        }
      }
    }
    // sequential composition on the circle
    bool compose_ok = true;
    std::string compose_failure;
    std::uniform_int_distribution<int> turn(0, 23);
    for (std::size_t trial = 0; trial < 50; ++trial) {
      std::vector<MetricPoint> points;
      for (int i = 0; i < 3; ++i) points.push_back(circle.turns(make_rational(turn(rng), 24)));
      const Navigation nav = sequential_compose(circle, circle_pair_navigator(), points);
      const bool constant = points[0] == points[1] && points[1] == points[2];
      const std::size_t support = min_support(nav.diagram);
      if (support != (constant ? 1u : 2u)) {
        compose_failure = circle.format(points[0]) + " " + circle.format(points[1]) + " " + circle.format(points[2]) + " -> " +
                          std::to_string(support);
      }
      compose_ok = compose_ok && support == (constant ? 1u : 2u);
    }
    r.pass = weights_ok && theta_ok && compose_ok;
    r.detail = std::string("join_weights ") + (weights_ok ? "ok" : "FAIL") + ", theta_concat " + (theta_ok ? "ok" : "FAIL") +
               ", sequential_compose min_support 2 " + (compose_ok ? "ok" : "FAIL at " + compose_failure);
  });
}

double lp_distance_bisection(const MetricSpace& space, const FiniteMeasure& mu, const FiniteMeasure& nu) {
  auto dominated = [&](const FiniteMeasure& a, const FiniteMeasure& b, double eps) {
    const std::size_t n = a.support_size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      double mass = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1) mass += to_double(a.atoms()[i].weight);
      }
      double near = 0;
      for (const Atom& y : b.atoms()) {
        bool close = false;
        for (std::size_t i = 0; i < n && !close; ++i) {
          close = (mask >> i & 1) && space.distance(a.atoms()[i].point, y.point) <= eps;
        }
        if (close) near += to_double(y.weight);
      }
      if (mass > near + eps + 1e-15) return false;
    }
    return true;
  };
  double lo = 0, hi = 1;
  for (int iter = 0; iter < 80; ++iter) {
    const double mid = (lo + hi) / 2;
    if (dominated(mu, nu, mid) && dominated(nu, mu, mid)) hi = mid;
    else lo = mid;
  }
  return hi;
}

namespace {

struct MeasureFactory {
  MetricSpace space;
  std::function<MetricPoint(std::mt19937_64&)> point;

  FiniteMeasure measure(std::mt19937_64& rng, std::size_t max_atoms) const {
    const std::size_t count = 1 + rng() % max_atoms;
    std::vector<Atom> atoms;
    std::vector<int> raw;
    int total = 0;
    for (std::size_t i = 0; i < count; ++i) {
      raw.push_back(1 + static_cast<int>(rng() % 9));
      total += raw.back();
    }
    for (std::size_t i = 0; i < count; ++i) atoms.push_back({point(rng), make_rational(raw[i], total)});
    return FiniteMeasure(space, std::move(atoms));
  }
};

std::vector<MeasureFactory> factories() {
  std::vector<MeasureFactory> out;
  out.push_back({MetricSpace::circle(), [](std::mt19937_64& rng) {
                   return MetricSpace::circle().turns(make_rational(static_cast<int>(rng() % 48), 48));
                 }});
  out.push_back({MetricSpace::euclidean(2), [](std::mt19937_64& rng) {
                   return MetricSpace::euclidean(2).point(
                       {make_rational(static_cast<int>(rng() % 9) - 4, 8), make_rational(static_cast<int>(rng() % 9) - 4, 8)});
                 }});
  const MetricSpace graph = MetricSpace::graph(4, {{0, 1, 1}, {1, 2, make_rational(1, 2)}, {2, 0, 1}, {2, 3, make_rational(1, 4)}});
  out.push_back({graph, [graph](std::mt19937_64& rng) {
                   return graph.graph_point(rng() % 4, make_rational(static_cast<int>(rng() % 9), 8));
                 }});
  return out;
}

}  // namespace

CheckResult check_metrics(const VerifyOptions& options) {
  return guarded("10", "metric suites", [&](CheckResult& r) {
    std::mt19937_64 rng(options.seed + 10);
    const std::vector<MeasureFactory> spaces = factories();
    bool lp_ok = true, hausdorff_ok = true, dirac_ok = true;
    for (std::size_t trial = 0; trial < 10000; ++trial) {
      const MeasureFactory& f = spaces[trial % spaces.size()];
      const FiniteMeasure a = f.measure(rng, 3), b = f.measure(rng, 3), c = f.measure(rng, 3);
      const double ab = lp_distance(f.space, a, b), ba = lp_distance(f.space, b, a);
      const double bc = lp_distance(f.space, b, c), ac = lp_distance(f.space, a, c);
      const double aa = lp_distance(f.space, a, a);
      lp_ok = lp_ok && aa <= kMetricTolerance && std::abs(ab - ba) <= kMetricTolerance &&
              ac <= ab + bc + kMetricTolerance && ab <= 1 + kMetricTolerance && (a == b || ab > kMetricTolerance);

      const FiniteSet x = support(a), y = support(b), z = support(c);
      const double xy = hausdorff_distance(f.space, x, y), yx = hausdorff_distance(f.space, y, x);
      const double yz = hausdorff_distance(f.space, y, z), xz = hausdorff_distance(f.space, x, z);
      hausdorff_ok = hausdorff_ok && hausdorff_distance(f.space, x, x) <= kMetricTolerance &&
                     std::abs(xy - yx) <= kMetricTolerance && xz <= xy + yz + kMetricTolerance &&
                     (x == y || xy > kMetricTolerance);
    }
    for (std::size_t trial = 0; trial < 100; ++trial) {
      const MeasureFactory& f = spaces[trial % spaces.size()];
      const MetricPoint p = f.point(rng), q = f.point(rng);
      const FiniteMeasure dp = dirac(f.space, p), dq = dirac(f.space, q);
      const double expected = std::min(f.space.distance(p, q), 1.0);
      const double exact = lp_distance(f.space, dp, dq);
      const double oracle = lp_distance_bisection(f.space, dp, dq);
      dirac_ok = dirac_ok && std::abs(exact - expected) <= kMetricTolerance && std::abs(oracle - expected) <= kMetricTolerance;
    }
    r.pass = lp_ok && hausdorff_ok && dirac_ok;
    std::ostringstream out;
    out << "lp axioms " << (lp_ok ? "ok" : "FAIL") << ", hausdorff axioms " << (hausdorff_ok ? "ok" : "FAIL")
        << ", dirac vs oracle " << (dirac_ok ? "ok" : "FAIL");
    r.detail = out.str();
  });
}

std::vector<CheckResult> run_all(const VerifyOptions& options) {
  return {check_cup_lengths(options),     check_zero_divisor_cup_lengths(options),
          check_bounds(options),          check_higman(options),
          check_resolver_counts(options), check_well_defined(options),
          check_symmetric_trace(options), check_support_continuity(options),
          check_navigation(options),      check_metrics(options)};
}

}  // namespace intertwine::verify
