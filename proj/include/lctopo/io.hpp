#pragma once

#include <string>
#include <string_view>

#include "lctopo/core.hpp"
#include "lctopo/maps.hpp"
#include "lctopo/verify.hpp"

namespace lctopo {

// Space files: {"points": ["a","b"], "opens": [[], ["a"], ["a","b"]]}.
// Input order is free; output lists opens by ascending mask and each open's
// points in ground order. Errors: MalformedFile for bad JSON or shape,
// DuplicateLabel, ForeignPoint, and any validation error of the family.
Topology parse_space(std::string_view text);
std::string format_space(const Topology& space);

// Map files: {"source": <space>, "target": <space>, "map": {"a": "x"}}.
// Every source point must be mapped exactly once.
FiniteMap parse_map(std::string_view text);
std::string format_map(const FiniteMap& map);

// {"points": [...], "leq": [["b","a"], ...]} listing every pair x <= y.
std::string format_preorder(const Preorder& order);

std::string format_set(const GroundSet& ground, PointSet a);
std::string format_witness(const Witness& witness);
// Elapsed time is included only when `with_timing` is set, so reports from
// different runs compare byte for byte.
std::string format_report(const VerificationReport& report, bool with_timing);
std::string format_search(const SearchResult& result);

std::string read_file(const std::string& path);

}  // namespace lctopo
