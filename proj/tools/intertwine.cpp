#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "intertwine/complex.hpp"
#include "intertwine/diagram.hpp"
#include "intertwine/error.hpp"
#include "intertwine/facts_io.hpp"
#include "intertwine/navigate.hpp"
#include "intertwine/resolver.hpp"
#include "intertwine/ring.hpp"
#include "json.hpp"
#include "verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace intertwine;

namespace {

enum class Format { text, json };

fs::path data_dir() {
  if (const char* env = std::getenv("INTERTWINE_DATA"); env && *env) return env;
  return INTERTWINE_DEFAULT_DATA_DIR;
}

/// Paths that do not exist as given are looked up under the data directory.
fs::path resolve_input(const std::string& given) {
  fs::path path(given);
  if (fs::exists(path) || path.is_absolute()) return path;
  if (fs::exists(data_dir() / path)) return data_dir() / path;
  throw DomainError("no such file: " + given);
}

std::string decimal(const Rational& value) {
  std::ostringstream out;
  out << std::setprecision(6) << to_double(value);
  return out.str();
}

std::string exact(const Rational& value) { return to_string(value) + " (" + decimal(value) + ")"; }

GradedAlgebra load_algebra(const std::string& input, const std::string& field_text) {
  const fs::path path = resolve_input(input);
  const FieldSpec field = FieldSpec::parse(field_text);
  if (path.extension() == ".ring") {
    GradedAlgebra ring = load_ring(path);
    if (!(ring.field() == field)) {
      throw DomainError("ring file " + path.filename().string() + " is over " + ring.field().name() + ", not " +
                        field.name());
    }
    return ring;
  }
  return cohomology_ring(load_complex(path), field);
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_cohomology(const std::string& input, const std::string& field, Format format) {
  const GradedAlgebra a = load_algebra(input, field);
  if (format == Format::json) {
    print_json(json::parse(ring_to_json(a)));
    return 0;
  }
  std::cout << a.name() << " over " << a.field().name() << "\n";
  for (std::size_t d = 0; d <= a.top_degree(); ++d) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < a.dimension(d); ++i) labels.push_back(a.label({d, i}));
    std::cout << "H^" << d << ": " << a.dimension(d) << "  [";
    for (std::size_t i = 0; i < labels.size(); ++i) std::cout << (i ? ", " : "") << labels[i];
    std::cout << "]\n";
  }
  for (const auto& p : a.nonzero_products()) {
    Element result{p.left.degree + p.right.degree, p.result};
    std::cout << a.label(p.left) << " * " << a.label(p.right) << " = " << describe(a, result) << "\n";
  }
  return 0;
}

int run_cuplen(const std::string& input, const std::string& field, std::size_t budget, bool witness, Format format) {
  const GradedAlgebra a = load_algebra(input, field);
  ProductSearchOptions options;
  options.node_budget = budget;
  const CupLengthResult r = cup_length_search(a, options);
  if (r.truncated) throw BudgetExceeded("cup length search exceeded its budget (lower bound " + std::to_string(r.length) + ")");
  if (format == Format::json) {
    print_json({{"space", a.name()}, {"field", a.field().name()}, {"cup_length", r.length}, {"witness", r.witness}});
    return 0;
  }
  std::cout << r.length << "\n";
  if (witness && !r.witness.empty()) {
    for (std::size_t i = 0; i < r.witness.size(); ++i) std::cout << (i ? " * " : "witness: ") << r.witness[i];
    std::cout << "\n";
  }
  return 0;
}

int run_zcl(const std::string& input, const std::string& field, std::size_t m, std::size_t budget, bool witness,
            Format format) {
  const GradedAlgebra a = load_algebra(input, field);
  ProductSearchOptions options;
  options.node_budget = budget;
  const CupLengthResult r = zero_divisor_search(a, m, options);
  if (r.truncated) {
    throw BudgetExceeded("zero-divisor search exceeded its budget (lower bound " + std::to_string(r.length) + ")");
  }
  if (format == Format::json) {
    print_json({{"space", a.name()}, {"field", a.field().name()}, {"m", m}, {"zcl", r.length}, {"witness", r.witness}});
    return 0;
  }
  std::cout << r.length << "\n";
  if (witness && !r.witness.empty()) {
    for (std::size_t i = 0; i < r.witness.size(); ++i) std::cout << (i ? " * " : "witness: ") << r.witness[i];
    std::cout << "\n";
  }
  return 0;
}

BranchingDiagram load_checked_diagram(const std::string& input) {
  BranchingDiagram d = load_diagram(resolve_input(input));
  check(d);
  return d;
}

json resolver_json(const BranchingDiagram& d, const Resolver& r) {
  json routes = json::array();
  for (const auto& [route, weight] : r.weights) {
    json ids = json::array();
    for (std::size_t j = 0; j < route.size(); ++j) ids.push_back(d.strand(j, route[j]).id);
    routes.push_back({{"route", ids}, {"weight", to_string(weight)}});
  }
  return {{"support", r.support_size()}, {"routes", routes}};
}

int run_resolve(const std::string& input, std::size_t n, std::size_t budget, Format format) {
  const BranchingDiagram d = load_checked_diagram(input);
  const ResolverEnumeration e = enumerate_resolvers(d, n, RouteOptions{budget});
  if (format == Format::json) {
    json resolvers = json::array();
    for (const Resolver& r : e.vertices) resolvers.push_back(resolver_json(d, r));
    print_json({{"diagram", d.name},
                {"n", n},
                {"count", e.vertices.size()},
                {"polytope_dimension", e.polytope_dimension},
                {"resolvers", resolvers}});
    return 0;
  }
  std::cout << e.vertices.size() << " resolver" << (e.vertices.size() == 1 ? "" : "s") << " (polytope dim "
            << e.polytope_dimension << ")\n";
  for (std::size_t i = 0; i < e.vertices.size(); ++i) {
    std::cout << "resolver " << i + 1 << " (support " << e.vertices[i].support_size() << ")\n";
    for (const auto& [route, weight] : e.vertices[i].weights) {
      std::cout << "  " << route_label(d, route) << "  " << exact(weight) << "\n";
    }
  }
  return 0;
}

int run_minsupport(const std::string& input, std::size_t budget, Format format) {
  const BranchingDiagram d = load_checked_diagram(input);
  const std::size_t n = min_support(d, RouteOptions{budget});
  if (format == Format::json) print_json({{"diagram", d.name}, {"min_support", n}});
  else std::cout << n << "\n";
  return 0;
}

json measure_json(const MetricSpace& space, const FiniteMeasure& mu) {
  json atoms = json::array();
  for (const Atom& a : mu.atoms()) atoms.push_back({{"point", space.point_to_json(a.point)}, {"weight", to_string(a.weight)}});
  return atoms;
}

int run_navigate(const std::vector<std::string>& points_text, std::size_t samples, const std::string& out_path,
                 Format format) {
  if (points_text.size() < 2) throw DomainError("navigate needs at least two points");
  if (samples < 2) throw DomainError("navigate needs at least two samples");
  const MetricSpace circle = MetricSpace::circle();
  std::vector<MetricPoint> points;
  for (const std::string& p : points_text) points.push_back(circle.turns(parse_rational(p)));
  const Vector times = uniform_times(samples);
  const Navigation nav = points.size() == 2 ? circle_navigate(points[0].coords[0], points[1].coords[0], times)
                                            : sequential_compose(circle, circle_pair_navigator(), points, times);
  const std::size_t support = min_support(nav.diagram);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw DomainError("cannot write " + out_path);
    out << diagram_to_json(nav.diagram).dump(2) << "\n";
  }
  if (format == Format::json) {
    json rows = json::array();
    for (std::size_t i = 0; i < nav.times.size(); ++i) {
      rows.push_back({{"t", to_string(nav.times[i])}, {"measure", measure_json(circle, nav.measures[i])}});
    }
    print_json({{"min_support", support}, {"samples", rows}, {"diagram", diagram_to_json(nav.diagram)}});
    return 0;
  }
  std::cout << "min_support " << support << "\n";
  for (std::size_t i = 0; i < nav.times.size(); ++i) {
    std::cout << "t=" << exact(nav.times[i]) << "  " << intertwine::format(circle, nav.measures[i]) << "\n";
  }
  return 0;
}

struct BoundsArgs {
  std::vector<std::string> complexes;
  std::vector<std::string> rings;
  std::vector<std::string> facts;
  std::vector<std::string> fields{"q"};
  std::vector<std::string> queries;
  bool no_classical = false;
  bool no_external = false;
  bool trace = false;
  std::size_t max_m = 8;
  std::size_t zcl_m = 3;
};

int run_bounds(const BoundsArgs& args, Format format) {
  FactBase::Options options;
  options.max_m = args.max_m;
  options.external_rules = !args.no_external;
  FactBase base(options);
  if (!args.no_classical) load_facts(base, data_dir() / "facts" / "classical.facts");
  for (const std::string& f : args.facts) load_facts(base, resolve_input(f));
  for (const std::string& c : args.complexes) {
    const fs::path path = resolve_input(c);
    const SimplicialComplex complex = load_complex(path);
    for (const std::string& field : args.fields) {
      assert_ring_facts(base, complex.name(), cohomology_ring(complex, FieldSpec::parse(field)), path.filename().string(),
                        args.zcl_m);
    }
  }
  for (const std::string& r : args.rings) {
    const fs::path path = resolve_input(r);
    const GradedAlgebra ring = load_ring(path);
    assert_ring_facts(base, ring.name(), ring, path.filename().string(), args.zcl_m);
  }
  base.propagate();

  if (!args.queries.empty()) {
    json answers = json::array();
    for (const std::string& q : args.queries) {
      const auto colon = q.find(':');
      if (colon == std::string::npos) throw DomainError("query must look like space:invariant, got '" + q + "'");
      const std::string space = q.substr(0, colon);
      const Invariant inv = Invariant::parse(q.substr(colon + 1));
      const Derived d = base.derive(space, inv);
      if (format == Format::json) {
        answers.push_back({{"space", space},
                           {"invariant", inv.name()},
                           {"lo", d.interval.lo},
                           {"hi", d.interval.hi == kInfinity ? json(nullptr) : json(d.interval.hi)},
                           {"lower", trace_to_json(d.lower)},
                           {"upper", trace_to_json(d.upper)}});
        continue;
      }
      std::cout << inv.name() << "(" << space << ") = " << format_interval(d.interval) << "\n";
      if (args.trace) std::cout << format_trace(d.lower) << format_trace(d.upper);
    }
    if (format == Format::json) print_json({{"rows", answers}});
    return 0;
  }

  if (format == Format::json) {
    print_json(report_to_json(base, args.trace));
    return 0;
  }
  std::string current;
  for (const auto& [key, d] : base.entries()) {
    if (key.first != current) {
      current = key.first;
      std::cout << current << "\n";
    }
    std::cout << "  " << std::left << std::setw(12) << key.second.name() << format_interval(d.interval) << "\n";
    if (args.trace) {
      std::istringstream lines(format_trace(d.lower) + format_trace(d.upper));
      for (std::string line; std::getline(lines, line);) std::cout << "      " << line << "\n";
    }
  }
  for (const Separation& s : base.strict_separations()) {
    std::cout << "strict: " << Invariant::iTC(s.m).name() << "(" << s.space << ") " << format_interval(s.itc) << " < "
              << Invariant::dTC(s.m).name() << "(" << s.space << ") " << format_interval(s.dtc) << "\n";
  }
  return 0;
}

int run_verify(const std::string& dir, std::uint64_t seed, Format format) {
  verify::VerifyOptions options;
  options.data_dir = dir.empty() ? data_dir() : fs::path(dir);
  options.seed = seed;
  const std::vector<verify::CheckResult> results = verify::run_all(options);
  bool all = true;
  json rows = json::array();
  for (const auto& r : results) {
    all = all && r.pass;
    if (format == Format::json) {
      rows.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
    } else {
      std::cout << std::left << std::setw(4) << r.id << (r.pass ? "PASS  " : "FAIL  ") << std::setw(40) << r.title
                << r.detail << "\n";
    }
  }
  if (format == Format::json) print_json({{"checks", rows}, {"all_pass", all}});
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intertwining invariants: cohomology, resolvers, navigation and bounds"};
  app.require_subcommand(1);
  std::string format_text = "text";
  app.add_option("--format", format_text, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string input, field = "q";
  std::size_t m = 2, n = 2, budget = 1'000'000;
  bool witness = false;

  auto* cohomology = app.add_subcommand("cohomology", "Cohomology ring of a complex or ring file");
  cohomology->add_option("input", input, "Complex (.cx) or ring (.ring) file")->required();
  cohomology->add_option("--field", field, "q, r, z2, zp:5, ...");

  auto* cuplen = app.add_subcommand("cuplen", "Cup length");
  cuplen->add_option("input", input, "Complex (.cx) or ring (.ring) file")->required();
  cuplen->add_option("--field", field, "q, r, z2, zp:5, ...");
  cuplen->add_option("--budget", budget, "Search node budget")->check(CLI::PositiveNumber);
  cuplen->add_flag("--witness", witness, "Print a longest nonzero product");

  auto* zcl = app.add_subcommand("zcl", "Zero-divisor cup length");
  zcl->add_option("input", input, "Complex (.cx) or ring (.ring) file")->required();
  zcl->add_option("--field", field, "q, r, z2, zp:5, ...");
  zcl->add_option("--m", m, "Number of factors")->check(CLI::Range(2, 16));
  zcl->add_option("--budget", budget, "Search node budget")->check(CLI::PositiveNumber);
  zcl->add_flag("--witness", witness, "Print a longest nonzero product");

  auto* resolve = app.add_subcommand("resolve", "Vertex resolvers of support at most n");
  resolve->add_option("diagram", input, "Diagram (.bd) file")->required();
  resolve->add_option("--n", n, "Support bound")->check(CLI::PositiveNumber);
  resolve->add_option("--budget", budget, "Route cap")->check(CLI::PositiveNumber);

  auto* minsupport = app.add_subcommand("minsupport", "Least support of a resolver");
  minsupport->add_option("diagram", input, "Diagram (.bd) file")->required();
  minsupport->add_option("--budget", budget, "Route cap")->check(CLI::PositiveNumber);

  std::vector<std::string> points;
  std::size_t samples = 11;
  std::string out_path;
  auto* navigate = app.add_subcommand("navigate", "Two-strand navigation on the circle");
  navigate->add_option("points", points, "Points in turns, e.g. 0 1/4 1/2")->required()->expected(2, 64);
  navigate->add_option("--samples", samples, "Number of sample times");
  navigate->add_option("--out", out_path, "Write the emitted diagram here");

  BoundsArgs bounds_args;
  auto* bounds = app.add_subcommand("bounds", "Propagate invariant bounds");
  bounds->add_option("--complex", bounds_args.complexes, "Complex file (repeatable)");
  bounds->add_option("--ring", bounds_args.rings, "Ring file (repeatable)");
  bounds->add_option("--facts", bounds_args.facts, "Facts file (repeatable)");
  bounds->add_option("--field", bounds_args.fields, "Fields for computed facts (repeatable)");
  bounds->add_option("--query", bounds_args.queries, "space:invariant, e.g. torus:iTC (repeatable)");
  bounds->add_option("--max-m", bounds_args.max_m, "Largest m")->check(CLI::Range(2, 32));
  bounds->add_option("--zcl-m", bounds_args.zcl_m, "Largest m for computed zcl")->check(CLI::Range(2, 8));
  bounds->add_flag("--no-classical", bounds_args.no_classical, "Skip the shipped axiom pack");
  bounds->add_flag("--no-external", bounds_args.no_external, "Disable the external rule R16");
  bounds->add_flag("--trace", bounds_args.trace, "Print derivation traces");

  std::string verify_dir;
  std::uint64_t seed = verify::VerifyOptions{}.seed;
  auto* verify_paper = app.add_subcommand("verify-paper", "Run the reproduction suite");
  verify_paper->add_option("--data", verify_dir, "Data directory");
  verify_paper->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  const Format format = format_text == "json" ? Format::json : Format::text;

  try {
    if (*cohomology) return run_cohomology(input, field, format);
    if (*cuplen) return run_cuplen(input, field, budget, witness, format);
    if (*zcl) return run_zcl(input, field, m, budget, witness, format);
    if (*resolve) return run_resolve(input, n, budget, format);
    if (*minsupport) return run_minsupport(input, budget, format);
    if (*navigate) return run_navigate(points, samples, out_path, format);
    if (*bounds) return run_bounds(bounds_args, format);
    if (*verify_paper) return run_verify(verify_dir, seed, format);
  } catch (const Contradiction& e) {
    std::cerr << "contradiction: " << e.what() << "\n";
    return 3;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
