#include "intertwine/bounds.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <set>

#include "intertwine/error.hpp"
#include "intertwine/field.hpp"

namespace intertwine {

std::string format_value(Value v) { return v == kInfinity ? "inf" : std::to_string(v); }

std::string format_interval(const Interval& interval) {
  if (interval.hi == kInfinity) return "≥ " + std::to_string(interval.lo);
  return "[" + std::to_string(interval.lo) + ", " + std::to_string(interval.hi) + "]";
}

bool is_char_zero_field(const std::string& field) { return field == "Q" || field == "R"; }

std::string Invariant::name() const {
  auto with_m = [this](const char* base) {
    return m == 2 ? std::string(base) : std::string(base) + "(" + std::to_string(m) + ")";
  };
  switch (kind) {
    case InvariantKind::cat: return "cat";
    case InvariantKind::dcat: return "dcat";
    case InvariantKind::icat: return "icat";
    case InvariantKind::TC: return with_m("TC");
    case InvariantKind::dTC: return with_m("dTC");
    case InvariantKind::iTC: return with_m("iTC");
    case InvariantKind::cl: return "cl[" + field + "]";
    case InvariantKind::zcl: return with_m("zcl") + "[" + field + "]";
    case InvariantKind::H_positive: return "H+[" + field + "]";
  }
  return "";
}

namespace {

std::string canonical_field(std::string_view text) {
  if (text == "R" || text == "r" || text == "reals") return "R";
  return FieldSpec::parse(text).name();
}

std::size_t parse_count(std::string_view text, std::string_view whole) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) throw DomainError("bad invariant '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Invariant Invariant::parse(std::string_view text) {
  const std::string_view whole = text;
  std::string field;
  if (auto open = text.find('['); open != std::string_view::npos) {
    if (text.back() != ']') throw DomainError("bad invariant '" + std::string(whole) + "'");
    field = canonical_field(text.substr(open + 1, text.size() - open - 2));
    text = text.substr(0, open);
  }
  std::size_t m = 0;
  if (auto open = text.find('('); open != std::string_view::npos) {
    if (text.back() != ')') throw DomainError("bad invariant '" + std::string(whole) + "'");
    m = parse_count(text.substr(open + 1, text.size() - open - 2), whole);
    text = text.substr(0, open);
  } else if (auto under = text.find('_'); under != std::string_view::npos && text.substr(0, under) != "H") {
    m = parse_count(text.substr(under + 1), whole);
    text = text.substr(0, under);
  }
  auto needs_field = [&](InvariantKind k) {
    if (field.empty()) throw DomainError("invariant '" + std::string(whole) + "' needs a field, e.g. [Q]");
    return k;
  };
  Invariant inv;
  if (text == "cat") inv.kind = InvariantKind::cat;
  else if (text == "dcat") inv.kind = InvariantKind::dcat;
  else if (text == "icat") inv.kind = InvariantKind::icat;
  else if (text == "TC") inv.kind = InvariantKind::TC;
  else if (text == "dTC") inv.kind = InvariantKind::dTC;
  else if (text == "iTC") inv.kind = InvariantKind::iTC;
  else if (text == "cl") inv.kind = needs_field(InvariantKind::cl);
  else if (text == "zcl") inv.kind = needs_field(InvariantKind::zcl);
  else if (text == "H+" || text == "H_positive") inv.kind = needs_field(InvariantKind::H_positive);
  else throw DomainError("unknown invariant '" + std::string(whole) + "'");

  const bool sequential = inv.kind == InvariantKind::TC || inv.kind == InvariantKind::dTC ||
                          inv.kind == InvariantKind::iTC || inv.kind == InvariantKind::zcl;
  if (sequential) {
    inv.m = m == 0 ? 2 : m;
    if (inv.m < 2) throw DomainError("invariant '" + std::string(whole) + "' needs m >= 2");
  } else if (m != 0) {
    throw DomainError("invariant '" + std::string(whole) + "' takes no m");
  }
  const bool fielded = inv.kind == InvariantKind::cl || inv.kind == InvariantKind::zcl || inv.kind == InvariantKind::H_positive;
  if (!fielded && !field.empty()) throw DomainError("invariant '" + std::string(whole) + "' takes no field");
  inv.field = field;
  return inv;
}

std::string Derivation::claim() const {
  if (source == Source::attribute) return citation;
  return invariant.name() + "(" + space + ") " + (side == Side::lower ? "≥ " : "≤ ") + format_value(value);
}

const std::map<std::string, std::string>& rule_statements() {
  static const std::map<std::string, std::string> statements = {
      {"R1", "iTC_m ≤ dTC_m ≤ TC_m"},
      {"R2", "icat ≤ dcat ≤ cat"},
      {"R3", "icat ≤ iTC"},
      {"R4", "iTC_m(X) ≤ icat(X^m)"},
      {"R5", "iTC_m ≤ iTC_{m+1}"},
      {"R6", "topological group: iTC = icat and iTC_{m+1}(X) ≤ icat(X^m)"},
      {"R7", "degree-k covering E → X: icat(X) ≤ k(icat(E)+1)-1, iTC_m(X) ≤ km(iTC_m(E)+1)-1"},
      {"R8", "invariant of a factor or wedge summand ≤ invariant of the product or wedge"},
      {"R9", "homotopy equivalent spaces share every invariant"},
      {"R10", "contractible ⇔ icat = 0 ⇔ iTC_m = 0"},
      {"R11", "cl_F ≥ 2 with F = Q or R ⇒ icat ≥ 2"},
      {"R12", "zcl_F ≥ 2 with F = Q or R ⇒ iTC ≥ 2"},
      {"R13", "H^d(X;F) ≠ 0 for some d ≥ 1, F = Q or R ⇒ iTC_m ≥ 2 for m ≥ 3"},
      {"R14", "cl_F ≤ dcat and zcl^m_F ≤ dTC_m for F = Q or R"},
      {"R15", "cl_F ≤ cat and zcl^m_F ≤ TC_m for any field"},
      {"R16", "dcat(X^{m-1}) ≤ dTC_m(X)"},
  };
  return statements;
}

namespace {

int rule_number(const std::string& id) { return id.size() > 1 ? std::stoi(id.substr(1)) : 0; }

Value clamp(Value v, Side side) {
  if (v == kInfinity || v <= kMaxFinite) return v;
  return side == Side::lower ? kMaxFinite : kInfinity;
}

std::string justification(const DerivationPtr& node) {
  if (!node) return "default";
  switch (node->source) {
    case Derivation::Source::axiom: return "axiom: " + node->citation;
    case Derivation::Source::computed: return "computed: " + node->citation;
    case Derivation::Source::attribute: return "attribute: " + node->citation;
    case Derivation::Source::rule: return node->rule + (node->external ? " (external)" : "") + ": " + node->citation;
  }
  return "";
}

template <typename T>
void merge_sorted(std::vector<T>& into, const std::vector<T>& from) {
  into.insert(into.end(), from.begin(), from.end());
  std::sort(into.begin(), into.end());
  into.erase(std::unique(into.begin(), into.end()), into.end());
}

}  // namespace

FactBase::FactBase(Options options) : options_(options) {
  if (options_.max_m < 2) throw DomainError("max_m must be at least 2");
}

void FactBase::declare(const SpaceRef& space) {
  if (space.name.empty()) throw DomainError("space needs a name");
  for (const auto& [e, k] : space.covered_by) {
    if (k < 1) throw DomainError("covering degree must be at least 1");
    (void)e;
  }
  if (space.power_of && space.power_of->second < 1) throw DomainError("power exponent must be at least 1");
  std::map<std::string, SpaceRef> saved = spaces_;
  SpaceRef& s = spaces_[space.name];
  s.name = space.name;
  auto merge_tri = [&](Tri& into, Tri from, const char* what) {
    if (from == Tri::unknown) return;
    if (into != Tri::unknown && into != from) {
      spaces_ = saved;
      throw Contradiction("space '" + space.name + "' declared both " + what + " and not " + what);
    }
    into = from;
  };
  merge_tri(s.contractible, space.contractible, "contractible");
  merge_tri(s.topological_group, space.topological_group, "a topological group");
  merge_sorted(s.homotopy_equivalent, space.homotopy_equivalent);
  merge_sorted(s.product_of, space.product_of);
  merge_sorted(s.wedge_of, space.wedge_of);
  merge_sorted(s.covered_by, space.covered_by);
  if (space.power_of) {
    if (s.power_of && *s.power_of != *space.power_of) {
      spaces_ = saved;
      throw DomainError("space '" + space.name + "' declared as two different powers");
    }
    s.power_of = space.power_of;
  }
  if (!space.citation.empty()) s.citation = s.citation.empty() ? space.citation : std::min(s.citation, space.citation);
  std::vector<std::string> referenced = space.homotopy_equivalent;
  referenced.insert(referenced.end(), space.product_of.begin(), space.product_of.end());
  referenced.insert(referenced.end(), space.wedge_of.begin(), space.wedge_of.end());
  for (const auto& [e, k] : space.covered_by) referenced.push_back(e);
  if (space.power_of) referenced.push_back(space.power_of->first);
  for (const std::string& r : referenced) spaces_[r].name = r;
  for (const std::string& r : space.homotopy_equivalent) merge_sorted(spaces_[r].homotopy_equivalent, {space.name});
  try {
    check_acyclic();
  } catch (...) {
    spaces_ = saved;
    throw;
  }
}

void FactBase::check_acyclic() const {
  using Edges = std::function<std::vector<std::string>(const SpaceRef&)>;
  const std::vector<std::pair<std::string, Edges>> kinds = {
      {"product_of", [](const SpaceRef& s) { return s.product_of; }},
      {"wedge_of", [](const SpaceRef& s) { return s.wedge_of; }},
      {"power_of", [](const SpaceRef& s) { return s.power_of ? std::vector<std::string>{s.power_of->first} : std::vector<std::string>{}; }},
      {"covered_by", [](const SpaceRef& s) {
         std::vector<std::string> out;
         for (const auto& [e, k] : s.covered_by) out.push_back(e);
         return out;
       }},
  };
  for (const auto& [label, edges] : kinds) {
    std::map<std::string, int> state;  // 1 = on stack, 2 = done
    std::function<void(const std::string&)> visit = [&](const std::string& name) {
      state[name] = 1;
      for (const std::string& next : edges(spaces_.at(name))) {
        if (state[next] == 1) throw DomainError("relation " + label + " is cyclic through '" + next + "'");
        if (state[next] == 0) visit(next);
      }
      state[name] = 2;
    };
    for (const auto& [name, s] : spaces_) {
      if (state[name] == 0) visit(name);
    }
  }
}

void FactBase::check_invariant(const Invariant& inv) const {
  switch (inv.kind) {
    case InvariantKind::TC:
    case InvariantKind::dTC:
    case InvariantKind::iTC:
      if (inv.m < 2 || inv.m > options_.max_m) {
        throw DomainError("invariant " + inv.name() + " outside m = 2.." + std::to_string(options_.max_m));
      }
      break;
    case InvariantKind::zcl:
      if (inv.m < 2) throw DomainError("zcl needs m >= 2");
      [[fallthrough]];
    case InvariantKind::cl:
    case InvariantKind::H_positive:
      if (inv.field.empty()) throw DomainError("invariant " + inv.name() + " needs a field");
      break;
    default:
      break;
  }
}

const FactBase::Bounds* FactBase::find(const std::string& space, const Invariant& invariant) const {
  auto it = store_.find({space, invariant});
  return it == store_.end() ? nullptr : &it->second;
}

void FactBase::assert_fact(const std::string& space, const Invariant& invariant, Interval interval,
                           const std::string& citation, Derivation::Source source) {
  if (citation.empty()) throw DomainError("refusing unlabeled fact for " + invariant.name() + "(" + space + ")");
  if (interval.lo > interval.hi) throw DomainError("fact for " + invariant.name() + "(" + space + ") has lo > hi");
  check_invariant(invariant);
  interval.lo = clamp(interval.lo, Side::lower);
  interval.hi = clamp(interval.hi, Side::upper);
  if (!has_space(space)) declare(SpaceRef{space, Tri::unknown, Tri::unknown, {}, {}, {}, std::nullopt, {}, ""});

  Bounds next = store_[{space, invariant}];
  auto leaf = [&](Side side, Value v) {
    auto node = std::make_shared<Derivation>();
    node->source = source;
    node->space = space;
    node->invariant = invariant;
    node->side = side;
    node->value = v;
    node->citation = citation;
    return DerivationPtr(node);
  };
  auto tie_prefers = [&](const DerivationPtr& current) {
    return current && current->source != Derivation::Source::rule && citation < current->citation;
  };
  if (interval.lo > next.lo || (interval.lo == next.lo && interval.lo > 0 && (!next.lower || tie_prefers(next.lower) ||
                                                                                next.lower->source == Derivation::Source::rule))) {
    next.lo = interval.lo;
    next.lower = leaf(Side::lower, interval.lo);
  }
  if (interval.hi < next.hi || (interval.hi == next.hi && interval.hi != kInfinity &&
                                (!next.upper || tie_prefers(next.upper) || next.upper->source == Derivation::Source::rule))) {
    next.hi = interval.hi;
    next.upper = leaf(Side::upper, interval.hi);
  }
  if (next.lo > next.hi) {
    throw Contradiction("contradiction for " + invariant.name() + "(" + space + "): lower bound " + format_value(next.lo) +
                        " [" + justification(next.lower) + "] exceeds upper bound " + format_value(next.hi) + " [" +
                        justification(next.upper) + "]");
  }
  store_[{space, invariant}] = std::move(next);
}

namespace {

struct Candidate {
  DerivationPtr node;
};

bool better(const Derivation& a, const Derivation& b) {
  if (a.value != b.value) return a.side == Side::lower ? a.value > b.value : a.value < b.value;
  if (a.cost != b.cost) return a.cost < b.cost;
  return rule_number(a.rule) < rule_number(b.rule);
}

}  // namespace

std::size_t FactBase::propagate() {
  using Op = Derivation::Op;
  for (std::size_t round = 1; round <= options_.round_budget; ++round) {
    std::map<std::pair<Key, Side>, DerivationPtr> best;

    auto emit = [&](const std::string& rule, const std::string& space, const Invariant& inv, Side side, Op op,
                    const DerivationPtr& bound, Value constant, std::vector<DerivationPtr> attributes) {
      Value value = constant;
      if (bound) {
        const Value v = bound->value;
        switch (op.kind) {
          case Op::Kind::same: value = v; break;
          case Op::Kind::affine: value = v == kInfinity ? kInfinity : op.factor * (v + 1) - 1; break;
          case Op::Kind::threshold:
            if (bound->side == Side::lower ? v < op.need : v > op.need) return;
            break;
          case Op::Kind::constant: break;
        }
      }
      value = clamp(value, side);
      const Bounds* current = find(space, inv);
      const Value lo = current ? current->lo : 0;
      const Value hi = current ? current->hi : kInfinity;
      std::size_t cost = 1 + (bound ? bound->cost : 0);
      if (side == Side::lower) {
        if (value < lo || (value == lo && (value == 0 || !current || !current->lower || cost >= current->lower->cost))) return;
      } else {
        if (value > hi || (value == hi && (value == kInfinity || !current || !current->upper || cost >= current->upper->cost))) return;
      }
      auto node = std::make_shared<Derivation>();
      node->source = Derivation::Source::rule;
      node->space = space;
      node->invariant = inv;
      node->side = side;
      node->value = value;
      node->rule = rule;
      node->citation = rule_statements().at(rule);
      node->external = rule == "R16";
      node->op = op;
      node->premises = std::move(attributes);
      if (bound) node->premises.push_back(bound);
      node->cost = cost;
      auto& slot = best[{{space, inv}, side}];
      if (!slot || better(*node, *slot)) slot = std::move(node);
    };

    auto lower = [&](const std::string& space, const Invariant& inv) -> DerivationPtr {
      const Bounds* b = find(space, inv);
      return b && b->lower && b->lo > 0 ? b->lower : nullptr;
    };
    auto upper = [&](const std::string& space, const Invariant& inv) -> DerivationPtr {
      const Bounds* b = find(space, inv);
      return b && b->upper && b->hi != kInfinity ? b->upper : nullptr;
    };
    // a(x) <= b(y): lower bounds flow up, upper bounds flow down.
    auto le = [&](const std::string& rule, const std::string& x, const Invariant& a, const std::string& y,
                  const Invariant& b, const std::vector<DerivationPtr>& attributes = {}) {
      if (auto p = lower(x, a)) emit(rule, y, b, Side::lower, {}, p, 0, attributes);
      if (auto p = upper(y, b)) emit(rule, x, a, Side::upper, {}, p, 0, attributes);
    };
    auto attribute = [](const SpaceRef& s, const std::string& what) {
      auto node = std::make_shared<Derivation>();
      node->source = Derivation::Source::attribute;
      node->space = s.name;
      node->citation = s.name + " is " + what + (s.citation.empty() ? "" : " (" + s.citation + ")");
      return DerivationPtr(node);
    };

    std::map<std::pair<std::string, std::size_t>, std::string> powers;
    for (const auto& [name, s] : spaces_) {
      if (s.power_of) powers[*s.power_of] = name;
    }
    auto power = [&](const std::string& base, std::size_t k) -> std::optional<std::string> {
      if (k == 1) return base;
      auto it = powers.find({base, k});
      return it == powers.end() ? std::nullopt : std::optional<std::string>(it->second);
    };
    auto fielded = [&](const std::string& space, InvariantKind kind) {
      std::vector<Invariant> out;
      for (auto it = store_.lower_bound({space, Invariant{}}); it != store_.end() && it->first.first == space; ++it) {
        if (it->first.second.kind == kind) out.push_back(it->first.second);
      }
      return out;
    };

    const std::size_t max_m = options_.max_m;
    for (const auto& [x, s] : spaces_) {
      const Invariant icat = Invariant::icat();
      le("R2", x, icat, x, Invariant::dcat());
      le("R2", x, Invariant::dcat(), x, Invariant::cat());
      le("R3", x, icat, x, Invariant::iTC(2));
      for (std::size_t m = 2; m <= max_m; ++m) {
        le("R1", x, Invariant::iTC(m), x, Invariant::dTC(m));
        le("R1", x, Invariant::dTC(m), x, Invariant::TC(m));
        if (m < max_m) le("R5", x, Invariant::iTC(m), x, Invariant::iTC(m + 1));
        if (auto p = power(x, m)) le("R4", x, Invariant::iTC(m), *p, icat);
        if (options_.external_rules) {
          if (auto p = power(x, m - 1)) le("R16", *p, Invariant::dcat(), x, Invariant::dTC(m));
        }
      }

      if (s.topological_group == Tri::yes) {
        DerivationPtr group = attribute(s, "a topological group");
        le("R6", x, Invariant::iTC(2), x, icat, {group});
        for (std::size_t m = 1; m + 1 <= max_m; ++m) {
          if (auto p = power(x, m)) le("R6", x, Invariant::iTC(m + 1), *p, icat, {group});
        }
      }

      for (const auto& [e, k] : s.covered_by) {
        if (auto p = upper(e, icat)) emit("R7", x, icat, Side::upper, {Op::Kind::affine, static_cast<Value>(k), 0}, p, 0, {});
        for (std::size_t m = 2; m <= max_m; ++m) {
          if (auto p = upper(e, Invariant::iTC(m))) {
            emit("R7", x, Invariant::iTC(m), Side::upper, {Op::Kind::affine, static_cast<Value>(k * m), 0}, p, 0, {});
          }
        }
      }

      std::vector<std::string> parts = s.product_of;
      parts.insert(parts.end(), s.wedge_of.begin(), s.wedge_of.end());
      if (s.power_of) parts.push_back(s.power_of->first);
      for (const std::string& part : parts) {
        le("R8", part, icat, x, icat);
        for (std::size_t m = 2; m <= max_m; ++m) le("R8", part, Invariant::iTC(m), x, Invariant::iTC(m));
      }

      for (const std::string& y : s.homotopy_equivalent) {
        std::set<Invariant> invariants = {Invariant::cat(), Invariant::dcat(), icat};
        for (std::size_t m = 2; m <= max_m; ++m) {
          invariants.insert({Invariant::TC(m), Invariant::dTC(m), Invariant::iTC(m)});
        }
        for (auto kind : {InvariantKind::cl, InvariantKind::zcl, InvariantKind::H_positive}) {
          for (const Invariant& inv : fielded(x, kind)) invariants.insert(inv);
        }
        for (const Invariant& inv : invariants) {
          le("R9", x, inv, y, inv);
          le("R9", y, inv, x, inv);
        }
      }

      // R10: contractibility.
      std::vector<Invariant> tc_family;
      for (std::size_t m = 2; m <= max_m; ++m) tc_family.push_back(Invariant::iTC(m));
      const Op constant{Op::Kind::constant, 1, 0};
      if (s.contractible == Tri::yes) {
        DerivationPtr a = attribute(s, "contractible");
        emit("R10", x, icat, Side::upper, constant, nullptr, 0, {a});
        for (const Invariant& inv : tc_family) emit("R10", x, inv, Side::upper, constant, nullptr, 0, {a});
      } else if (s.contractible == Tri::no) {
        DerivationPtr a = attribute(s, "not contractible");
        emit("R10", x, icat, Side::lower, constant, nullptr, 1, {a});
        for (const Invariant& inv : tc_family) emit("R10", x, inv, Side::lower, constant, nullptr, 1, {a});
      }
      const Op at_least_one{Op::Kind::threshold, 1, 1};
      const Op at_most_zero{Op::Kind::threshold, 1, 0};
      for (const Invariant& h : fielded(x, InvariantKind::H_positive)) {
        if (auto p = lower(x, h)) {
          emit("R10", x, icat, Side::lower, at_least_one, p, 1, {});
          for (const Invariant& inv : tc_family) emit("R10", x, inv, Side::lower, at_least_one, p, 1, {});
        }
      }
      for (const Invariant& inv : tc_family) {
        if (auto p = lower(x, icat)) emit("R10", x, inv, Side::lower, at_least_one, p, 1, {});
        if (auto p = lower(x, inv)) emit("R10", x, icat, Side::lower, at_least_one, p, 1, {});
        if (auto p = upper(x, icat)) emit("R10", x, inv, Side::upper, at_most_zero, p, 0, {});
        if (auto p = upper(x, inv)) emit("R10", x, icat, Side::upper, at_most_zero, p, 0, {});
      }

      // Cohomological lower bounds.
      const Op at_least_two{Op::Kind::threshold, 1, 2};
      for (const Invariant& cl : fielded(x, InvariantKind::cl)) {
        if (is_char_zero_field(cl.field)) {
          if (auto p = lower(x, cl)) emit("R11", x, icat, Side::lower, at_least_two, p, 2, {});
          le("R14", x, cl, x, Invariant::dcat());
        }
        le("R15", x, cl, x, Invariant::cat());
      }
      for (const Invariant& zcl : fielded(x, InvariantKind::zcl)) {
        if (zcl.m > max_m) continue;
        if (is_char_zero_field(zcl.field)) {
          if (zcl.m == 2) {
            if (auto p = lower(x, zcl)) emit("R12", x, Invariant::iTC(2), Side::lower, at_least_two, p, 2, {});
          }
          le("R14", x, zcl, x, Invariant::dTC(zcl.m));
        }
        le("R15", x, zcl, x, Invariant::TC(zcl.m));
      }
      for (const Invariant& h : fielded(x, InvariantKind::H_positive)) {
        if (!is_char_zero_field(h.field)) continue;
        if (auto p = lower(x, h)) {
          for (std::size_t m = 3; m <= max_m; ++m) emit("R13", x, Invariant::iTC(m), Side::lower, at_least_one, p, 2, {});
        }
      }
    }

    if (best.empty()) return round - 1;
    for (auto& [slot, node] : best) {
      Bounds& b = store_[slot.first];
      if (slot.second == Side::lower) {
        b.lo = node->value;
        b.lower = node;
      } else {
        b.hi = node->value;
        b.upper = node;
      }
      if (b.lo > b.hi) {
        throw Contradiction("contradiction for " + slot.first.second.name() + "(" + slot.first.first + "): lower bound " +
                            format_value(b.lo) + " [" + justification(b.lower) + "] exceeds upper bound " +
                            format_value(b.hi) + " [" + justification(b.upper) + "]");
      }
    }
  }
  throw BudgetExceeded("propagation did not reach a fixpoint within " + std::to_string(options_.round_budget) + " rounds");
}

Interval FactBase::interval(const std::string& space, const Invariant& invariant) const {
  const Bounds* b = find(space, invariant);
  return b ? Interval{b->lo, b->hi} : Interval{};
}

Derived FactBase::derive(const std::string& space, const Invariant& invariant) const {
  if (!has_space(space)) throw DomainError("unknown space '" + space + "'");
  check_invariant(invariant);
  const Bounds* b = find(space, invariant);
  if (!b) return Derived{};
  return Derived{{b->lo, b->hi}, b->lower, b->upper};
}

std::vector<std::pair<std::pair<std::string, Invariant>, Derived>> FactBase::entries() const {
  std::vector<std::pair<std::pair<std::string, Invariant>, Derived>> out;
  for (const auto& [key, b] : store_) {
    if (b.lo == 0 && b.hi == kInfinity) continue;
    out.push_back({key, Derived{{b.lo, b.hi}, b.lower, b.upper}});
  }
  return out;
}

std::vector<Separation> FactBase::strict_separations() const {
  std::vector<Separation> out;
  for (const auto& [name, s] : spaces_) {
    for (std::size_t m = 2; m <= options_.max_m; ++m) {
      Interval itc = interval(name, Invariant::iTC(m));
      Interval dtc = interval(name, Invariant::dTC(m));
      if (itc.hi != kInfinity && itc.hi < dtc.lo) out.push_back({name, m, itc, dtc});
    }
  }
  return out;
}

bool FactBase::replay(const DerivationPtr& node) const {
  using Op = Derivation::Op;
  if (!node) return true;
  switch (node->source) {
    case Derivation::Source::axiom:
    case Derivation::Source::computed:
      return !node->citation.empty();
    case Derivation::Source::attribute:
      return has_space(node->space);
    case Derivation::Source::rule:
      break;
  }
  DerivationPtr bound;
  for (const DerivationPtr& p : node->premises) {
    if (!replay(p)) return false;
    if (p->source != Derivation::Source::attribute) bound = p;
  }
  Value value = node->value;
  switch (node->op.kind) {
    case Op::Kind::same:
      if (!bound) return false;
      value = bound->value;
      break;
    case Op::Kind::affine:
      if (!bound) return false;
      value = bound->value == kInfinity ? kInfinity : node->op.factor * (bound->value + 1) - 1;
      break;
    case Op::Kind::threshold:
      if (!bound) return false;
      if (bound->side == Side::lower ? bound->value < node->op.need : bound->value > node->op.need) return false;
      break;
    case Op::Kind::constant:
      if (node->premises.empty()) return false;
      break;
  }
  return clamp(value, node->side) == node->value;
}

std::string format_trace(const DerivationPtr& node) {
  std::string out;
  std::function<void(const DerivationPtr&, std::size_t)> walk = [&](const DerivationPtr& n, std::size_t depth) {
    out += std::string(2 * depth, ' ') + n->claim() + "  [" + justification(n) + "]\n";
    for (const DerivationPtr& p : n->premises) walk(p, depth + 1);
  };
  if (node) walk(node, 0);
  return out;
}

}  // namespace intertwine
