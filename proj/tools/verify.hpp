#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "intertwine/bounds.hpp"
#include "intertwine/measure.hpp"

namespace intertwine::verify {

struct CheckResult {
  std::string id;
  std::string title;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  std::filesystem::path data_dir;
  std::uint64_t seed = 20240611;
};

/// Fact base built from the shipped axiom pack plus cl, zcl and H+ computed
/// over Q and Z/2 for every complex and ring in the data directory.
FactBase reproduction_base(const std::filesystem::path& data_dir, FactBase::Options options = {});

CheckResult check_cup_lengths(const VerifyOptions& options);
CheckResult check_zero_divisor_cup_lengths(const VerifyOptions& options);
CheckResult check_bounds(const VerifyOptions& options);
CheckResult check_higman(const VerifyOptions& options);
CheckResult check_resolver_counts(const VerifyOptions& options);
CheckResult check_well_defined(const VerifyOptions& options);
CheckResult check_symmetric_trace(const VerifyOptions& options);
CheckResult check_support_continuity(const VerifyOptions& options);
CheckResult check_navigation(const VerifyOptions& options);
CheckResult check_metrics(const VerifyOptions& options);

/// All ten checks in order. Exceptions inside a check become a failing result.
std::vector<CheckResult> run_all(const VerifyOptions& options);

/// Levy-Prokhorov distance by bisection on epsilon, testing every subset of
/// each support against the closed epsilon-neighborhood. Independent of lp_distance.
double lp_distance_bisection(const MetricSpace& space, const FiniteMeasure& mu, const FiniteMeasure& nu);

/// Corpus diagram files in name order.
std::vector<std::filesystem::path> corpus_diagrams(const std::filesystem::path& data_dir);

}  // namespace intertwine::verify
