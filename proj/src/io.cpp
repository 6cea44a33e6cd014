#include "lctopo/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace lctopo {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void malformed(const std::string& what) { throw TopologyError(ErrorCode::kMalformedFile, what); }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    malformed(e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) malformed("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) malformed(std::string("missing field \"") + key + "\"");
  return *it;
}

std::vector<std::string> string_array(const Json& j, const char* what) {
  if (!j.is_array()) malformed(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) malformed(std::string(what) + " must contain strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

Topology space_from_json(const Json& j) {
  const GroundSet ground(string_array(field(j, "points"), "points"));
  const Json& opens = field(j, "opens");
  if (!opens.is_array()) malformed("opens must be an array");
  std::vector<PointSet> family;
  for (const auto& open : opens) {
    const auto labels = string_array(open, "each open");
    family.push_back(PointSet::from_labels(ground, labels));
  }
  return validate_topology(ground, family);
}

Json labels_json(const GroundSet& ground, PointSet a) {
  Json out = Json::array();
  for (std::size_t i : a.members()) out.push_back(ground.label(i));
  return out;
}

Json space_json(const Topology& space) {
  Json out;
  out["points"] = Json(std::vector<std::string>(space.ground().labels().begin(), space.ground().labels().end()));
  Json opens = Json::array();
  for (Mask m : space.open_masks()) opens.push_back(labels_json(space.ground(), space.set(m)));
  out["opens"] = std::move(opens);
  return out;
}

Json assignment_json(const Topology& source, const Topology& target, std::span<const std::size_t> assignment) {
  Json out = Json::object();
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    out[source.ground().label(i)] = target.ground().label(assignment[i]);
  }
  return out;
}

Json witness_json(const Witness& w) {
  Json out;
  out["subject"] = w.subject;
  Json spaces = Json::array();
  for (const auto& s : w.spaces) spaces.push_back(space_json(s));
  out["spaces"] = std::move(spaces);
  if (!w.sets.empty()) {
    Json sets = Json::array();
    for (const auto& s : w.sets) {
      sets.push_back({{"name", s.name}, {"space", s.space}, {"points", labels_json(w.spaces[s.space].ground(), s.set)}});
    }
    out["sets"] = std::move(sets);
  }
  if (!w.points.empty()) {
    Json points = Json::array();
    for (const auto& p : w.points) {
      points.push_back({{"name", p.name}, {"space", p.space}, {"point", w.spaces[p.space].ground().label(p.point)}});
    }
    out["points"] = std::move(points);
  }
  if (!w.assignment.empty() && w.spaces.size() >= 2) {
    out["map"] = assignment_json(w.spaces[0], w.spaces[1], w.assignment);
  }
  out["clause"] = w.clause;
  if (!w.values.empty()) {
    Json values = Json::object();
    for (const auto& v : w.values) values[v.name] = v.value;
    out["values"] = std::move(values);
  }
  return out;
}

}  // namespace

Topology parse_space(std::string_view text) { return space_from_json(parse_json(text)); }

std::string format_space(const Topology& space) { return space_json(space).dump(); }

FiniteMap parse_map(std::string_view text) {
  const Json j = parse_json(text);
  Topology source = space_from_json(field(j, "source"));
  Topology target = space_from_json(field(j, "target"));
  const Json& map = field(j, "map");
  if (!map.is_object()) malformed("map must be an object");
  std::vector<std::optional<std::size_t>> assigned(source.size());
  for (const auto& [key, value] : map.items()) {
    if (!value.is_string()) malformed("map values must be point labels");
    const std::size_t from = source.ground().index_or_throw(key);
    assigned[from] = target.ground().index_or_throw(value.get<std::string>());
  }
  std::vector<std::size_t> assignment;
  for (std::size_t i = 0; i < assigned.size(); ++i) {
    if (!assigned[i]) malformed("map has no image for " + source.ground().label(i));
    assignment.push_back(*assigned[i]);
  }
  return FiniteMap(std::move(source), std::move(target), std::move(assignment));
}

std::string format_map(const FiniteMap& map) {
  Json out;
  out["source"] = space_json(map.source());
  out["target"] = space_json(map.target());
  out["map"] = assignment_json(map.source(), map.target(), map.assignment());
  return out.dump();
}

std::string format_preorder(const Preorder& order) {
  Json out;
  out["points"] = Json(std::vector<std::string>(order.ground().labels().begin(), order.ground().labels().end()));
  Json leq = Json::array();
  for (std::size_t x = 0; x < order.size(); ++x) {
    for (std::size_t y = 0; y < order.size(); ++y) {
      if (order.leq(x, y)) leq.push_back({order.ground().label(x), order.ground().label(y)});
    }
  }
  out["leq"] = std::move(leq);
  return out.dump();
}

std::string format_set(const GroundSet& ground, PointSet a) { return labels_json(ground, a).dump(); }

std::string format_witness(const Witness& witness) { return witness_json(witness).dump(); }

std::string format_report(const VerificationReport& report, bool with_timing) {
  Json out;
  out["prop"] = report.prop;
  out["n"] = report.n;
  out["checked"] = report.checked;
  Json counterexamples = Json::array();
  for (const auto& w : report.counterexamples) counterexamples.push_back(witness_json(w));
  out["counterexamples"] = std::move(counterexamples);
  if (!report.measures.empty()) out["measures"] = Json(report.measures);
  if (with_timing) out["ms"] = report.elapsed_ms;
  return out.dump();
}

std::string format_search(const SearchResult& result) {
  Json out;
  out["found"] = result.witness.has_value();
  out["n"] = result.n_reached;
  out["visited"] = result.visited;
  if (result.witness) out["witness"] = witness_json(*result.witness);
  return out.dump();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) malformed("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace lctopo
