#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "intertwine/algebra.hpp"
#include "intertwine/bounds.hpp"
#include "json.hpp"

namespace intertwine {

/// Reads a facts file into `base`.
///
///   # comment
///   @space torus topological_group=true covered_by=torus:4
///   torus cat 2 2 Lusternik-Schnirelmann category of the torus
///
/// A fact line is `<space> <invariant> <lo> <hi|inf> <citation...>`; the
/// citation is mandatory. Errors carry `source:line`.
void parse_facts(FactBase& base, const std::string& text, const std::string& source = "<facts>");
void load_facts(FactBase& base, const std::filesystem::path& path);

/// Asserts the computed cl, zcl(m) for m = 2..max_zcl_m and H+ of `algebra` as
/// facts about `space`, citing `origin`.
void assert_ring_facts(FactBase& base, const std::string& space, const GradedAlgebra& algebra, const std::string& origin,
                       std::size_t max_zcl_m = 3);

struct ReportRow {
  std::string space;
  Invariant invariant;
  Interval interval;
  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

/// Rows for every nondefault entry, in (space, invariant) order.
std::vector<ReportRow> report_rows(const FactBase& base);

/// {"rows": [{"space","invariant","lo","hi"}...], "separations": [...], "traces": {...}}.
/// `hi` is null when unbounded.
nlohmann::json report_to_json(const FactBase& base, bool traces);
std::vector<ReportRow> rows_from_json(const nlohmann::json& report);

nlohmann::json trace_to_json(const DerivationPtr& node);

}  // namespace intertwine
