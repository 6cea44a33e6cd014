#include "lctopo/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lctopo/constructions.hpp"
#include "lctopo/enumeration.hpp"
#include "lctopo/io.hpp"
#include "lctopo/locally_closed.hpp"
#include "lctopo/maps.hpp"
#include "lctopo/properties.hpp"
#include "lctopo/verify.hpp"

namespace lctopo {

namespace {

using Json = nlohmann::ordered_json;

// Enumeration cap after applying LCTOPO_MAX_N, which may only lower it.
std::size_t enumeration_cap() {
  const char* value = std::getenv("LCTOPO_MAX_N");
  if (value == nullptr || *value == '\0') return kMaxEnumerationPoints;
  char* end = nullptr;
  const long parsed = std::strtol(value, &end, 10);
  if (*end != '\0' || parsed < 0) {
    throw TopologyError(ErrorCode::kMalformedFile, std::string("LCTOPO_MAX_N is not a size: ") + value);
  }
  return std::min<std::size_t>(static_cast<std::size_t>(parsed), kMaxEnumerationPoints);
}

void check_cap(std::size_t n) {
  const std::size_t cap = enumeration_cap();
  if (n > cap) {
    throw TopologyError(ErrorCode::kSizeCapExceeded,
                        "n = " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(cap));
  }
}

Topology load_space(const std::string& path) { return parse_space(read_file(path)); }

// "a,b" -> {a, b}; the empty string is the empty set.
PointSet parse_set_arg(const Topology& space, const std::string& text) {
  std::vector<std::string> labels;
  std::stringstream in(text);
  for (std::string label; std::getline(in, label, ',');) {
    if (!label.empty()) labels.push_back(label);
  }
  return PointSet::from_labels(space.ground(), labels);
}

Json set_json(const Topology& space, PointSet a) { return Json::parse(format_set(space.ground(), a)); }

std::string quoted(const std::string& label) {
  std::string out = "\"";
  for (char c : label) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

struct Options {
  std::string file;
  std::vector<std::string> files;
  std::vector<std::string> properties;
  std::string set;
  bool family = false;
  std::vector<std::string> expect;
  std::vector<std::string> expect_not;
  std::string construction;
  std::size_t n = 0;
  std::size_t n_min = 1;
  bool classes = false;
  bool count_only = false;
  unsigned jobs = 1;
  std::string prop;
  bool all = false;
  bool timing = false;
  std::vector<std::string> require;
  std::vector<std::string> forbid;
  std::string kind;
};

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  const Topology space = load_space(o.file);
  std::vector<PropertyId> ids;
  if (o.properties.empty()) {
    for (const auto& info : property_registry()) ids.push_back(info.id);
  } else {
    for (const auto& token : o.properties) ids.push_back(parse_property(token));
  }
  bool all_true = true;
  for (PropertyId id : ids) {
    const bool value = check_property(space, id);
    all_true = all_true && value;
    out << Json{{"property", property_token(id)}, {"value", value}}.dump() << '\n';
  }
  err << "valid topology: " << space.size() << " points, " << space.open_count() << " opens\n";
  return o.properties.empty() || all_true ? kExitOk : kExitFalse;
}

int cmd_classify_set(const Options& o, std::ostream& out, std::ostream&) {
  const Topology space = load_space(o.file);
  const PointSet a = parse_set_arg(space, o.set);
  const SetClassification c = classify_set(space, a);
  Json j;
  j["set"] = set_json(space, a);
  j["open"] = c.open;
  j["closed"] = c.closed;
  j["clopen"] = c.clopen;
  j["dense"] = c.dense;
  j["preopen"] = c.preopen;
  j["regular_open"] = c.regular_open;
  j["locally_closed"] = is_locally_closed(space, a);
  j["closure"] = set_json(space, closure(space, a));
  j["interior"] = set_json(space, interior(space, a));
  j["boundary"] = set_json(space, boundary(space, a));
  j["derived"] = set_json(space, derived_set(space, a));
  out << j.dump() << '\n';
  return kExitOk;
}

int cmd_lc(const Options& o, std::ostream& out, std::ostream& err) {
  const Topology space = load_space(o.file);
  if (o.family) {
    const auto family = locally_closed_family(space);
    for (PointSet a : family) out << format_set(space.ground(), a) << '\n';
    err << family.size() << " locally closed sets\n";
    return kExitOk;
  }
  const PointSet a = parse_set_arg(space, o.set);
  const bool lc = is_locally_closed(space, a);
  Json j;
  j["set"] = set_json(space, a);
  j["locally_closed"] = lc;
  Json criteria = Json::object();
  for (auto c : lc_criteria::kAll) criteria[std::string(lc_criteria::name(c))] = lc_criteria::holds(c, space, a);
  j["criteria"] = std::move(criteria);
  Json decompositions = Json::array();
  for (const auto& d : lc_decompositions(space, a)) {
    decompositions.push_back({{"open", set_json(space, d.open_part)}, {"closed", set_json(space, d.closed_part)}});
  }
  j["decompositions"] = std::move(decompositions);
  out << j.dump() << '\n';
  return lc ? kExitOk : kExitFalse;
}

int cmd_tl(const Options& o, std::ostream& out, std::ostream&) {
  out << format_space(tl_topology(load_space(o.file))) << '\n';
  return kExitOk;
}

int cmd_map_classify(const Options& o, std::ostream& out, std::ostream& err) {
  const FiniteMap f = parse_map(read_file(o.file));
  const MapClassification c = classify_map(f);
  const auto flags = c.flags();
  const auto lookup = [&](const std::string& name) {
    for (const auto& [flag, value] : flags) {
      if (flag == name) return value;
    }
    throw TopologyError(ErrorCode::kUnknownKind, name);
  };
  Json j = Json::object();
  for (const auto& [flag, value] : flags) j[std::string(flag)] = value;
  bool met = true;
  for (const auto& name : o.expect) met = met && lookup(name);
  for (const auto& name : o.expect_not) met = met && !lookup(name);
  out << j.dump() << '\n';
  if (!met) err << "map classification does not match the expectations\n";
  return met ? kExitOk : kExitFalse;
}

int cmd_construct(const Options& o, std::ostream& out, std::ostream&) {
  std::vector<Topology> spaces;
  for (const auto& path : o.files) spaces.push_back(load_space(path));
  if (o.construction == "subspace") {
    if (spaces.size() != 1) throw TopologyError(ErrorCode::kMalformedFile, "subspace takes one space file");
    out << format_space(subspace(spaces[0], parse_set_arg(spaces[0], o.set))) << '\n';
  } else if (o.construction == "product") {
    out << format_space(product(spaces)) << '\n';
  } else {
    out << format_space(disjoint_sum(spaces)) << '\n';
  }
  return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out, std::ostream& err) {
  check_cap(o.n);
  if (o.classes) {
    const auto classes = enumerate_classes(o.n, o.jobs);
    if (o.count_only) {
      out << classes.size() << '\n';
    } else {
      for (const auto& t : classes) out << format_space(t) << '\n';
    }
    err << classes.size() << " classes on " << o.n << " points\n";
    return kExitOk;
  }
  if (o.count_only) {
    const auto count = count_labeled(o.n, o.jobs);
    out << count << '\n';
    err << count << " labeled topologies on " << o.n << " points\n";
    return kExitOk;
  }
  std::uint64_t count = 0;
  enumerate_labeled(o.n, [&](const Topology& t) {
    out << format_space(t) << '\n';
    ++count;
  });
  err << count << " labeled topologies on " << o.n << " points\n";
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  check_cap(o.n);
  std::vector<VerificationReport> reports;
  if (o.all) {
    reports = verify_all(o.n, o.jobs);
  } else {
    reports.push_back(verify_proposition(o.prop, o.n, o.jobs));
  }
  bool verified = true;
  for (const auto& r : reports) {
    out << format_report(r, o.timing) << '\n';
    err << r.prop << " n=" << r.n << ": " << (r.verified() ? "verified" : "FAILED") << " over " << r.checked
        << " instances";
    if (!r.verified()) err << ", " << r.counterexamples.size() << " counterexamples";
    err << '\n';
    verified = verified && r.verified();
  }
  return verified ? kExitOk : kExitFalse;
}

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
  check_cap(o.n);
  std::vector<PropertyId> require;
  std::vector<PropertyId> forbid;
  for (const auto& t : o.require) require.push_back(parse_property(t));
  for (const auto& t : o.forbid) forbid.push_back(parse_property(t));
  const SearchResult result = search(require, forbid, o.n, o.jobs, o.n_min);
  out << format_search(result) << '\n';
  if (result.witness) {
    err << "witness on " << result.witness->spaces[0].size() << " points\n";
  } else {
    err << "no witness up to n=" << o.n << " (" << result.visited << " spaces visited)\n";
  }
  return result.witness ? kExitOk : kExitFalse;
}

int cmd_search_phenomenon(const Options& o, std::ostream& out, std::ostream& err) {
  check_cap(o.n);
  const SearchResult result = search_set_phenomena(parse_phenomenon(o.kind), o.n);
  out << format_search(result) << '\n';
  if (result.witness) {
    err << "witness on " << result.witness->spaces[0].size() << " points\n";
  } else {
    err << "no witness up to n=" << o.n << " (" << result.visited << " classes visited)\n";
  }
  return result.witness ? kExitOk : kExitFalse;
}

int cmd_export_dot(const Options& o, std::ostream& out, std::ostream&) {
  out << export_dot(load_space(o.file));
  return kExitOk;
}

void report_error(std::ostream& out, std::ostream& err, std::string_view token, const std::string& message) {
  out << Json{{"error", token}, {"message", message}}.dump() << '\n';
  err << "error: " << token << ": " << message << '\n';
}

}  // namespace

std::string export_dot(const Topology& space) {
  const Preorder order = specialization_preorder(space);
  const std::size_t n = space.size();
  // Representative of each point's equivalence class: the first equivalent point.
  std::vector<std::size_t> rep(n);
  for (std::size_t x = 0; x < n; ++x) {
    rep[x] = x;
    for (std::size_t y = 0; y < x; ++y) {
      if (order.leq(x, y) && order.leq(y, x)) {
        rep[x] = rep[y];
        break;
      }
    }
  }
  const auto strictly_below = [&](std::size_t x, std::size_t y) { return order.leq(x, y) && !order.leq(y, x); };

  std::ostringstream dot;
  dot << "digraph specialization {\n";
  for (std::size_t x = 0; x < n; ++x) dot << "  " << quoted(space.ground().label(x)) << ";\n";
  for (std::size_t x = 0; x < n; ++x) {
    if (rep[x] != x) continue;
    std::size_t previous = x;
    for (std::size_t y = x + 1; y < n; ++y) {
      if (rep[y] != x) continue;
      dot << "  " << quoted(space.ground().label(previous)) << " -> " << quoted(space.ground().label(y))
          << " [dir=both];\n";
      previous = y;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (rep[x] != x) continue;
    for (std::size_t y = 0; y < n; ++y) {
      if (rep[y] != y || !strictly_below(x, y)) continue;
      bool cover = true;
      for (std::size_t z = 0; z < n && cover; ++z) {
        cover = !(rep[z] == z && strictly_below(x, z) && strictly_below(z, y));
      }
      if (cover) {
        dot << "  " << quoted(space.ground().label(x)) << " -> " << quoted(space.ground().label(y)) << ";\n";
      }
    }
  }
  dot << "}\n";
  return dot.str();
}

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite topology engine for locally closed sets", "lctopo"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "Validate a space file and evaluate properties");
  check->add_option("file", o.file, "Space file")->required();
  check->add_option("--property,-p", o.properties, "Property token (repeatable)");

  auto* classify = app.add_subcommand("classify-set", "Classify a subset of a space");
  classify->add_option("file", o.file, "Space file")->required();
  classify->add_option("--set", o.set, "Comma-separated point labels")->required();

  auto* lc = app.add_subcommand("lc", "Locally closed test or the locally closed family");
  lc->add_option("file", o.file, "Space file")->required();
  auto* lc_set = lc->add_option("--set", o.set, "Comma-separated point labels");
  auto* lc_family = lc->add_flag("--family", o.family, "List every locally closed set");
  lc_set->excludes(lc_family);

  auto* tl = app.add_subcommand("tl", "Topology generated by the locally closed sets");
  tl->add_option("file", o.file, "Space file")->required();

  auto* map_classify = app.add_subcommand("map-classify", "Classify a map between finite spaces");
  map_classify->add_option("file", o.file, "Map file")->required();
  map_classify->add_option("--expect", o.expect, "Flag that must hold (repeatable)");
  map_classify->add_option("--expect-not", o.expect_not, "Flag that must fail (repeatable)");

  auto* construct = app.add_subcommand("construct", "Subspace, product or disjoint sum");
  construct->add_option("kind", o.construction, "subspace | product | sum")
      ->required()
      ->check(CLI::IsMember({"subspace", "product", "sum"}));
  construct->add_option("files", o.files, "Space files")->required();
  construct->add_option("--set", o.set, "Subspace points for `subspace`");

  auto* enumerate = app.add_subcommand("enumerate", "List topologies on n points");
  enumerate->add_option("-n", o.n, "Number of points")->required();
  enumerate->add_flag("--classes", o.classes, "One canonical form per homeomorphism class");
  enumerate->add_flag("--count-only", o.count_only, "Print only the count");
  enumerate->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Exhaustively check propositions");
  auto* verify_prop = verify->add_option("--prop", o.prop, "Proposition id, e.g. P05");
  auto* verify_all_flag = verify->add_flag("--all", o.all, "Every proposition");
  verify_prop->excludes(verify_all_flag);
  verify->add_option("-n", o.n, "Number of points")->required();
  verify->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--timing", o.timing, "Include elapsed milliseconds");

  auto* search_cmd = app.add_subcommand("search", "Smallest space with the given properties");
  search_cmd->add_option("--require", o.require, "Property that must hold (repeatable)");
  search_cmd->add_option("--forbid", o.forbid, "Property that must fail (repeatable)");
  search_cmd->add_option("-n", o.n, "Largest size")->required();
  search_cmd->add_option("--min-n", o.n_min, "Smallest size");
  search_cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* phenomenon = app.add_subcommand("search-phenomenon", "Smallest witness of a set phenomenon");
  phenomenon->add_option("kind", o.kind, "Phenomenon")->required();
  phenomenon->add_option("-n", o.n, "Largest size")->required();

  auto* dot = app.add_subcommand("export-dot", "Hasse diagram of the specialization preorder");
  dot->add_option("file", o.file, "Space file")->required();

  std::vector<const char*> argv{"lctopo"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    report_error(out, err, "Usage", e.what());
    return kExitInputError;
  }
  if (lc->parsed() && !o.family && lc_set->count() == 0) {
    report_error(out, err, "Usage", "lc needs --set or --family");
    return kExitInputError;
  }
  if (verify->parsed() && !o.all && o.prop.empty()) {
    report_error(out, err, "Usage", "verify needs --prop or --all");
    return kExitInputError;
  }

  try {
    if (check->parsed()) return cmd_check(o, out, err);
    if (classify->parsed()) return cmd_classify_set(o, out, err);
    if (lc->parsed()) return cmd_lc(o, out, err);
    if (tl->parsed()) return cmd_tl(o, out, err);
    if (map_classify->parsed()) return cmd_map_classify(o, out, err);
    if (construct->parsed()) return cmd_construct(o, out, err);
    if (enumerate->parsed()) return cmd_enumerate(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (search_cmd->parsed()) return cmd_search(o, out, err);
    if (phenomenon->parsed()) return cmd_search_phenomenon(o, out, err);
    return cmd_export_dot(o, out, err);
  } catch (const TopologyError& e) {
    report_error(out, err, e.token(), e.detail());
    return kExitInputError;
  }
}

}  // namespace lctopo
