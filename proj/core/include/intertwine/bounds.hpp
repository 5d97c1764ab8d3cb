#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace intertwine {

/// Invariant values live in {0, ..., 64, inf}.
using Value = std::uint32_t;
inline constexpr Value kInfinity = std::numeric_limits<Value>::max();
inline constexpr Value kMaxFinite = 64;

struct Interval {
  Value lo = 0;
  Value hi = kInfinity;

  bool is_point() const { return lo == hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// "[1, 2]", "[2, 2]" or "≥ 2" when unbounded above.
std::string format_interval(const Interval& interval);
std::string format_value(Value v);

enum class InvariantKind { cat, dcat, icat, TC, dTC, iTC, cl, zcl, H_positive };

/// An invariant of a space. `m` is set for TC, dTC, iTC, zcl; `field` ("Q", "R",
/// "Z/p") for cl, zcl, H_positive.
struct Invariant {
  InvariantKind kind = InvariantKind::cat;
  std::size_t m = 0;
  std::string field;

  static Invariant cat() { return {InvariantKind::cat, 0, ""}; }
  static Invariant dcat() { return {InvariantKind::dcat, 0, ""}; }
  static Invariant icat() { return {InvariantKind::icat, 0, ""}; }
  static Invariant TC(std::size_t m = 2) { return {InvariantKind::TC, m, ""}; }
  static Invariant dTC(std::size_t m = 2) { return {InvariantKind::dTC, m, ""}; }
  static Invariant iTC(std::size_t m = 2) { return {InvariantKind::iTC, m, ""}; }
  static Invariant cl(std::string field) { return {InvariantKind::cl, 0, std::move(field)}; }
  static Invariant zcl(std::size_t m, std::string field) { return {InvariantKind::zcl, m, std::move(field)}; }
  static Invariant H_positive(std::string field) { return {InvariantKind::H_positive, 0, std::move(field)}; }

  /// "cat", "TC", "TC(3)", "iTC", "cl[Q]", "zcl(3)[Q]", "H+[Z/2]"; m = 2 prints bare.
  std::string name() const;
  /// Inverse of name(); also accepts "TC(2)", "TC_3", "H_positive[Q]". Throws DomainError.
  static Invariant parse(std::string_view text);

  friend auto operator<=>(const Invariant&, const Invariant&) = default;
};

/// "Q" and "R": the fields for which the rational/real bounds apply.
bool is_char_zero_field(const std::string& field);

enum class Tri { unknown, yes, no };

struct SpaceRef {
  std::string name;
  Tri contractible = Tri::unknown;
  Tri topological_group = Tri::unknown;
  std::vector<std::string> homotopy_equivalent;
  std::vector<std::string> product_of;
  std::vector<std::string> wedge_of;
  std::optional<std::pair<std::string, std::size_t>> power_of;
  /// (total space E, degree k) of coverings E -> this space.
  std::vector<std::pair<std::string, std::size_t>> covered_by;
  std::string citation;  // where the attributes and relations were declared
};

enum class Side { lower, upper };

struct Derivation;
using DerivationPtr = std::shared_ptr<const Derivation>;

/// Immutable node of a proof trace.
struct Derivation {
  enum class Source { axiom, computed, attribute, rule };
  /// How a rule node's value follows from its bound premise.
  struct Op {
    enum class Kind { same, affine, threshold, constant };
    Kind kind = Kind::same;
    Value factor = 1;  // affine: factor * (v + 1) - 1
    Value need = 0;    // threshold: premise lower bound >= need, or upper bound <= need
  };

  Source source = Source::axiom;
  std::string space;
  Invariant invariant;
  Side side = Side::lower;
  Value value = 0;
  std::string rule;      // rule id for rule nodes
  std::string citation;  // literature citation, computation note, or rule statement
  bool external = false;
  Op op;
  std::vector<DerivationPtr> premises;
  std::size_t cost = 0;  // number of rule applications in the tree

  /// "iTC(circle) ≤ 1" style claim.
  std::string claim() const;
};

struct Separation {
  std::string space;
  std::size_t m = 2;
  Interval itc;
  Interval dtc;
};

struct Derived {
  Interval interval;
  DerivationPtr lower;  // null when the bound is the default 0
  DerivationPtr upper;  // null when unbounded
};

/// Named spaces, invariant intervals and the inference engine over the rule network R1-R16.
class FactBase {
 public:
  struct Options {
    std::size_t max_m = 8;
    bool external_rules = true;
    std::size_t round_budget = 10'000;
  };

  FactBase() : FactBase(Options{}) {}
  explicit FactBase(Options options);

  const Options& options() const { return options_; }

  /// Merges attributes and relations into the named space, creating it (and
  /// referenced spaces) on demand. Throws DomainError on cyclic relations.
  void declare(const SpaceRef& space);
  const std::map<std::string, SpaceRef>& spaces() const { return spaces_; }
  bool has_space(const std::string& name) const { return spaces_.count(name) > 0; }

  /// Intersects with the stored interval. Empty citations are refused
  /// (DomainError); an empty intersection throws Contradiction naming both sides.
  void assert_fact(const std::string& space, const Invariant& invariant, Interval interval, const std::string& citation,
                   Derivation::Source source = Derivation::Source::axiom);

  /// Runs rule rounds to the least fixpoint; returns the number of rounds.
  /// Throws Contradiction or BudgetExceeded.
  std::size_t propagate();

  Interval interval(const std::string& space, const Invariant& invariant) const;
  /// Throws DomainError for unknown spaces or invariants outside the configured range.
  Derived derive(const std::string& space, const Invariant& invariant) const;

  /// Every (space, invariant) with a nondefault bound, in key order.
  std::vector<std::pair<std::pair<std::string, Invariant>, Derived>> entries() const;

  /// Spaces and m with hi(iTC_m) < lo(dTC_m).
  std::vector<Separation> strict_separations() const;

  /// Re-applies the rule chain of a trace from its leaves; true iff every node's value is reproduced.
  bool replay(const DerivationPtr& node) const;

 private:
  using Key = std::pair<std::string, Invariant>;
  struct Bounds {
    Value lo = 0;
    Value hi = kInfinity;
    DerivationPtr lower;
    DerivationPtr upper;
  };

  void check_acyclic() const;
  void check_invariant(const Invariant& invariant) const;
  const Bounds* find(const std::string& space, const Invariant& invariant) const;

  Options options_;
  std::map<std::string, SpaceRef> spaces_;
  std::map<Key, Bounds> store_;
};

/// Rule id -> one-line statement.
const std::map<std::string, std::string>& rule_statements();

/// Indented tree rendering of a trace.
std::string format_trace(const DerivationPtr& node);

}  // namespace intertwine
