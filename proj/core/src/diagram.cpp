#include "intertwine/diagram.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "intertwine/error.hpp"

namespace intertwine {

std::size_t BranchingDiagram::interval_at(const Rational& t) const {
  if (t < event_times.front() || t > event_times.back()) throw DomainError("time " + to_string(t) + " outside [0, 1]");
  for (std::size_t j = 0; j + 1 < event_times.size(); ++j) {
    if (t <= event_times[j + 1]) return j;
  }
  return intervals.size() - 1;
}

std::pair<std::size_t, std::size_t> BranchingDiagram::locate(const std::string& id) const {
  for (std::size_t j = 0; j < intervals.size(); ++j) {
    for (std::size_t i = 0; i < intervals[j].size(); ++i) {
      if (intervals[j][i].id == id) return {j, i};
    }
  }
  throw DomainError("unknown strand '" + id + "'");
}

std::vector<std::string> validate(const BranchingDiagram& d) {
  std::vector<std::string> out;
  const std::string where = "diagram '" + d.name + "': ";
  const std::size_t k = d.intervals.size();
  if (k == 0) return {where + "no intervals"};
  if (d.event_times.size() != k + 1) {
    return {where + "expected " + std::to_string(k + 1) + " event times for " + std::to_string(k) + " intervals"};
  }
  if (d.event_times.front() != 0 || d.event_times.back() != 1) out.push_back(where + "event times must start at 0 and end at 1");
  for (std::size_t j = 1; j < d.event_times.size(); ++j) {
    if (d.event_times[j] <= d.event_times[j - 1]) out.push_back(where + "event times must increase strictly");
  }
  if (d.events.size() + 1 != k) {
    out.push_back(where + "expected " + std::to_string(k - 1) + " interior events, found " + std::to_string(d.events.size()));
    return out;
  }

  std::set<std::string> ids;
  for (std::size_t j = 0; j < k; ++j) {
    const std::string at = where + "interval " + std::to_string(j) + ": ";
    if (d.intervals[j].empty()) out.push_back(at + "no strands");
    Rational mass = 0;
    for (const Strand& s : d.intervals[j]) {
      if (!ids.insert(s.id).second) out.push_back(at + "duplicate strand id '" + s.id + "'");
      if (s.weight <= 0) out.push_back(at + "strand '" + s.id + "' has nonpositive weight");
      mass += s.weight;
    }
    if (mass != 1) out.push_back(at + "interval mass ≠ 1 (" + to_string(mass) + ")");
  }

  for (std::size_t e = 0; e + 1 < k; ++e) {
    const std::string at = where + "event " + std::to_string(e + 1) + " (t = " + to_string(d.event_times[e + 1]) + "): ";
    std::map<std::string, int> seen_in;
    std::map<std::string, int> seen_out;
    std::map<std::string, Rational> before;
    std::map<std::string, Rational> after;
    for (const Strand& s : d.intervals[e]) before[s.id] = s.weight;
    for (const Strand& s : d.intervals[e + 1]) after[s.id] = s.weight;
    for (std::size_t g = 0; g < d.events[e].size(); ++g) {
      const MeetingGroup& group = d.events[e][g];
      if (group.incoming.empty() || group.outgoing.empty()) out.push_back(at + "meeting group " + std::to_string(g) + " is empty on one side");
      Rational in = 0;
      Rational outw = 0;
      for (const std::string& id : group.incoming) {
        ++seen_in[id];
        if (auto it = before.find(id); it != before.end()) in += it->second;
        else out.push_back(at + "incoming strand '" + id + "' is not in the preceding interval");
      }
      for (const std::string& id : group.outgoing) {
        ++seen_out[id];
        if (auto it = after.find(id); it != after.end()) outw += it->second;
        else out.push_back(at + "outgoing strand '" + id + "' is not in the following interval");
      }
      if (in != outw) {
        out.push_back(at + "meeting group " + std::to_string(g) + " is unbalanced (" + to_string(in) + " in, " +
                      to_string(outw) + " out)");
      }
    }
    for (const auto& [id, w] : before) {
      if (seen_in[id] != 1) out.push_back(at + "strand '" + id + "' must end in exactly one meeting group");
    }
    for (const auto& [id, w] : after) {
      if (seen_out[id] != 1) out.push_back(at + "strand '" + id + "' must start in exactly one meeting group");
    }
  }
  if (!out.empty() || !d.realization) return out;

  const Realization& r = *d.realization;
  for (std::size_t j = 0; j < k; ++j) {
    for (const Strand& s : d.intervals[j]) {
      auto it = r.paths.find(s.id);
      if (it == r.paths.end()) {
        out.push_back(where + "strand '" + s.id + "' has no realization path");
        continue;
      }
      try {
        it->second.check(r.space);
      } catch (const DomainError& err) {
        out.push_back(where + "strand '" + s.id + "': " + err.what());
        continue;
      }
      if (it->second.start() != d.event_times[j] || it->second.end() != d.event_times[j + 1]) {
        out.push_back(where + "strand '" + s.id + "' path does not span its interval");
      }
    }
  }
  if (!out.empty()) return out;
  for (std::size_t e = 0; e + 1 < k; ++e) {
    const Rational& t = d.event_times[e + 1];
    for (std::size_t g = 0; g < d.events[e].size(); ++g) {
      const MeetingGroup& group = d.events[e][g];
      std::optional<MetricPoint> common;
      bool mismatch = false;
      for (const auto* side : {&group.incoming, &group.outgoing}) {
        for (const std::string& id : *side) {
          MetricPoint p = r.paths.at(id).at(r.space, t);
          if (!common) common = p;
          else if (!(p == *common)) mismatch = true;
        }
      }
      if (mismatch) {
        out.push_back(where + "event " + std::to_string(e + 1) + " group " + std::to_string(g) + ": meeting point mismatch");
      }
    }
  }
  return out;
}

void check(const BranchingDiagram& diagram) {
  std::vector<std::string> diagnostics = validate(diagram);
  if (diagnostics.empty()) return;
  std::string message;
  for (const std::string& line : diagnostics) message += (message.empty() ? "" : "\n") + line;
  throw DomainError(message);
}

MetricPoint strand_position(const BranchingDiagram& d, std::size_t interval, std::size_t index, const Rational& t) {
  if (!d.realization) throw DomainError("diagram '" + d.name + "' has no realization");
  return d.realization->paths.at(d.intervals[interval][index].id).at(d.realization->space, t);
}

FiniteMeasure measure_at(const BranchingDiagram& d, const Rational& t) {
  if (!d.realization) throw DomainError("diagram '" + d.name + "' has no realization");
  const std::size_t j = d.interval_at(t);
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < d.intervals[j].size(); ++i) atoms.push_back({strand_position(d, j, i, t), d.intervals[j][i].weight});
  return FiniteMeasure(d.realization->space, std::move(atoms));
}

namespace {

std::optional<std::size_t> group_index(const std::vector<MeetingGroup>& groups, const std::string& id, bool incoming) {
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const auto& ids = incoming ? groups[g].incoming : groups[g].outgoing;
    if (std::find(ids.begin(), ids.end(), id) != ids.end()) return g;
  }
  return std::nullopt;
}

// Both strands sit in the same group, so the merged strand keeps its own entry.
void remove_from_groups(std::vector<MeetingGroup>& groups, const std::string& id, bool incoming) {
  for (MeetingGroup& group : groups) {
    auto& ids = incoming ? group.incoming : group.outgoing;
    ids.erase(std::remove(ids.begin(), ids.end(), id), ids.end());
  }
}

}  // namespace

BranchingDiagram merge_coincident_strands(const BranchingDiagram& diagram) {
  if (!diagram.realization) return diagram;
  BranchingDiagram d = diagram;
  const MetricSpace& space = d.realization->space;
  for (std::size_t j = 0; j < d.intervals.size(); ++j) {
    auto& strands = d.intervals[j];
    for (std::size_t a = 0; a < strands.size(); ++a) {
      for (std::size_t b = a + 1; b < strands.size();) {
        const std::string& ida = strands[a].id;
        const std::string idb = strands[b].id;
        bool same_groups = true;
        if (j > 0) same_groups = same_groups && group_index(d.events[j - 1], ida, false) == group_index(d.events[j - 1], idb, false);
        if (j + 1 < d.intervals.size()) same_groups = same_groups && group_index(d.events[j], ida, true) == group_index(d.events[j], idb, true);
        if (!same_groups || !d.realization->paths.at(ida).same_trajectory(space, d.realization->paths.at(idb))) {
          ++b;
          continue;
        }
        strands[a].weight += strands[b].weight;
        if (j > 0) remove_from_groups(d.events[j - 1], idb, false);
        if (j + 1 < d.intervals.size()) remove_from_groups(d.events[j], idb, true);
        d.realization->paths.erase(idb);
        strands.erase(strands.begin() + static_cast<std::ptrdiff_t>(b));
      }
    }
  }
  return d;
}

namespace {

Rational rational_field(const nlohmann::json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw DomainError("expected a rational literal \"p/q\"");
}

}  // namespace

BranchingDiagram parse_diagram(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("diagram file is not valid JSON: ") + e.what());
  }
  try {
    BranchingDiagram d;
    d.name = doc.value("name", std::string("diagram"));
    for (const auto& t : doc.at("event_times")) d.event_times.push_back(rational_field(t));
    for (const auto& interval : doc.at("intervals")) {
      std::vector<Strand> strands;
      for (const auto& s : interval) strands.push_back({s.at("id").get<std::string>(), rational_field(s.at("weight"))});
      d.intervals.push_back(std::move(strands));
    }
    for (const auto& event : doc.value("events", nlohmann::json::array())) {
      std::vector<MeetingGroup> groups;
      for (const auto& g : event) {
        groups.push_back({g.at("in").get<std::vector<std::string>>(), g.at("out").get<std::vector<std::string>>()});
      }
      d.events.push_back(std::move(groups));
    }
    if (doc.contains("realization")) {
      const auto& r = doc.at("realization");
      Realization realization{MetricSpace::from_json(r.at("space")), {}};
      for (const auto& [id, samples] : r.at("paths").items()) {
        SampledPath path;
        for (const auto& sample : samples) {
          path.times.push_back(rational_field(sample.at(0)));
          path.points.push_back(realization.space.point_from_json(sample.at(1)));
        }
        realization.paths.emplace(id, std::move(path));
      }
      d.realization = std::move(realization);
    }
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed diagram file: ") + e.what());
  }
}

BranchingDiagram load_diagram(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open diagram file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_diagram(buffer.str());
}

nlohmann::json diagram_to_json(const BranchingDiagram& d) {
  nlohmann::json doc;
  doc["name"] = d.name;
  nlohmann::json times = nlohmann::json::array();
  for (const Rational& t : d.event_times) times.push_back(to_string(t));
  doc["event_times"] = times;
  nlohmann::json intervals = nlohmann::json::array();
  for (const auto& interval : d.intervals) {
    nlohmann::json strands = nlohmann::json::array();
    for (const Strand& s : interval) strands.push_back({{"id", s.id}, {"weight", to_string(s.weight)}});
    intervals.push_back(strands);
  }
  doc["intervals"] = intervals;
  nlohmann::json events = nlohmann::json::array();
  for (const auto& groups : d.events) {
    nlohmann::json e = nlohmann::json::array();
    for (const MeetingGroup& g : groups) e.push_back({{"in", g.incoming}, {"out", g.outgoing}});
    events.push_back(e);
  }
  doc["events"] = events;
  if (d.realization) {
    nlohmann::json paths = nlohmann::json::object();
    for (const auto& [id, path] : d.realization->paths) {
      nlohmann::json samples = nlohmann::json::array();
      for (std::size_t i = 0; i < path.times.size(); ++i) {
        samples.push_back({to_string(path.times[i]), d.realization->space.point_to_json(path.points[i])});
      }
      paths[id] = samples;
    }
    doc["realization"] = {{"space", d.realization->space.to_json()}, {"paths", paths}};
  }
  return doc;
}

Vector uniform_times(std::size_t n) {
  if (n < 2) throw DomainError("need at least two sample times");
  Vector out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(make_rational(static_cast<long>(i), static_cast<long>(n - 1)));
  for (Rational& t : out) t.canonicalize();
  return out;
}

}  // namespace intertwine
