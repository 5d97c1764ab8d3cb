#include "intertwine/facts_io.hpp"

#include <fstream>
#include <sstream>

#include "intertwine/error.hpp"
#include "intertwine/ring.hpp"

namespace intertwine {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string piece;
  while (std::getline(in, piece, sep)) {
    if (!piece.empty()) out.push_back(piece);
  }
  return out;
}

std::size_t parse_size(const std::string& text, const std::string& where) {
  try {
    std::size_t used = 0;
    const unsigned long value = std::stoul(text, &used);
    if (used == text.size()) return value;
  } catch (const std::exception&) {
  }
  throw DomainError(where + ": expected a number, got '" + text + "'");
}

Value parse_value(const std::string& text, const std::string& where) {
  if (text == "inf" || text == "∞") return kInfinity;
  const std::size_t v = parse_size(text, where);
  return v > kMaxFinite ? kInfinity : static_cast<Value>(v);
}

Tri parse_flag(const std::string& text, const std::string& where) {
  if (text == "true" || text == "yes") return Tri::yes;
  if (text == "false" || text == "no") return Tri::no;
  throw DomainError(where + ": expected true or false, got '" + text + "'");
}

std::pair<std::string, std::size_t> parse_pair(const std::string& text, const std::string& where) {
  const auto colon = text.rfind(':');
  if (colon == std::string::npos || colon == 0) throw DomainError(where + ": expected name:k, got '" + text + "'");
  return {text.substr(0, colon), parse_size(text.substr(colon + 1), where)};
}

void parse_space_line(FactBase& base, std::istringstream& in, const std::string& where) {
  SpaceRef space;
  if (!(in >> space.name)) throw DomainError(where + ": @space needs a name");
  space.citation = "declared at " + where;
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw DomainError(where + ": expected key=value, got '" + token + "'");
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    if (key == "contractible") space.contractible = parse_flag(value, where);
    else if (key == "topological_group") space.topological_group = parse_flag(value, where);
    else if (key == "homotopy_equivalent") space.homotopy_equivalent = split(value, ',');
    else if (key == "product_of") space.product_of = split(value, ',');
    else if (key == "wedge_of") space.wedge_of = split(value, ',');
    else if (key == "power_of") space.power_of = parse_pair(value, where);
    else if (key == "covered_by") {
      for (const std::string& item : split(value, ',')) space.covered_by.push_back(parse_pair(item, where));
    } else {
      throw DomainError(where + ": unknown attribute '" + key + "'");
    }
  }
  base.declare(space);
}

}  // namespace

void parse_facts(FactBase& base, const std::string& text, const std::string& source) {
  std::istringstream lines(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(lines, line)) {
    ++number;
    const std::string where = source + ":" + std::to_string(number);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream in(line);
    std::string head;
    in >> head;
    if (head == "@space") {
      parse_space_line(base, in, where);
      continue;
    }
    std::string invariant, lo, hi;
    if (!(in >> invariant >> lo >> hi)) throw DomainError(where + ": expected <space> <invariant> <lo> <hi> <citation>");
    std::string citation;
    std::getline(in, citation);
    const auto start = citation.find_first_not_of(" \t");
    const auto end = citation.find_last_not_of(" \t\r");
    citation = start == std::string::npos ? "" : citation.substr(start, end - start + 1);
    if (citation.empty()) throw DomainError(where + ": refusing unlabeled fact (no citation)");
    Invariant inv;
    try {
      inv = Invariant::parse(invariant);
    } catch (const DomainError& e) {
      throw DomainError(where + ": " + e.what());
    }
    base.assert_fact(head, inv, Interval{parse_value(lo, where), parse_value(hi, where)}, citation);
  }
}

void load_facts(FactBase& base, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  parse_facts(base, buffer.str(), path.filename().string());
}

void assert_ring_facts(FactBase& base, const std::string& space, const GradedAlgebra& algebra, const std::string& origin,
                       std::size_t max_zcl_m) {
  const std::string field = algebra.field().name();
  const auto computed = Derivation::Source::computed;
  const auto point = [](std::size_t v) {
    const Value value = v > kMaxFinite ? kMaxFinite : static_cast<Value>(v);
    return Interval{value, value};
  };
  base.assert_fact(space, Invariant::cl(field), point(cup_length(algebra)), "cup length of " + origin + " over " + field,
                   computed);
  const std::size_t top_m = std::min(max_zcl_m, base.options().max_m);
  for (std::size_t m = 2; m <= top_m; ++m) {
    base.assert_fact(space, Invariant::zcl(m, field), point(zero_divisor_cup_length(algebra, m)),
                     "zero-divisor cup length of " + origin + " over " + field, computed);
  }
  const bool positive = has_nonzero_positive_degree(algebra).has_value();
  base.assert_fact(space, Invariant::H_positive(field), point(positive ? 1 : 0),
                   "positive-degree cohomology of " + origin + " over " + field, computed);
}

std::vector<ReportRow> report_rows(const FactBase& base) {
  std::vector<ReportRow> rows;
  for (const auto& [key, derived] : base.entries()) rows.push_back({key.first, key.second, derived.interval});
  return rows;
}

nlohmann::json trace_to_json(const DerivationPtr& node) {
  if (!node) return nullptr;
  static const char* sources[] = {"axiom", "computed", "attribute", "rule"};
  nlohmann::json out = {{"claim", node->claim()}, {"source", sources[static_cast<int>(node->source)]}};
  if (node->source == Derivation::Source::rule) {
    out["rule"] = node->rule;
    if (node->external) out["external"] = true;
  }
  out["citation"] = node->citation;
  if (!node->premises.empty()) {
    out["premises"] = nlohmann::json::array();
    for (const DerivationPtr& p : node->premises) out["premises"].push_back(trace_to_json(p));
  }
  return out;
}

nlohmann::json report_to_json(const FactBase& base, bool traces) {
  nlohmann::json out;
  out["rows"] = nlohmann::json::array();
  for (const auto& [key, derived] : base.entries()) {
    nlohmann::json row = {{"space", key.first}, {"invariant", key.second.name()}, {"lo", derived.interval.lo}};
    row["hi"] = derived.interval.hi == kInfinity ? nlohmann::json(nullptr) : nlohmann::json(derived.interval.hi);
    if (traces) {
      row["lower"] = trace_to_json(derived.lower);
      row["upper"] = trace_to_json(derived.upper);
    }
    out["rows"].push_back(std::move(row));
  }
  out["separations"] = nlohmann::json::array();
  for (const Separation& s : base.strict_separations()) {
    out["separations"].push_back({{"space", s.space},
                                  {"m", s.m},
                                  {"iTC", format_interval(s.itc)},
                                  {"dTC", format_interval(s.dtc)}});
  }
  return out;
}

std::vector<ReportRow> rows_from_json(const nlohmann::json& report) {
  std::vector<ReportRow> rows;
  for (const auto& row : report.at("rows")) {
    const Value lo = row.at("lo").get<Value>();
    const Value hi = row.at("hi").is_null() ? kInfinity : row.at("hi").get<Value>();
    rows.push_back({row.at("space").get<std::string>(), Invariant::parse(row.at("invariant").get<std::string>()), {lo, hi}});
  }
  return rows;
}

}  // namespace intertwine
