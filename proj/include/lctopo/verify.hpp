#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lctopo/core.hpp"
#include "lctopo/properties.hpp"

namespace lctopo {

// What a proposition quantifies over at size n. Spaces always have exactly n
// points, except in the pair domains where both members range over 1..n.
enum class Domain {
  kSpaces,
  kSpaceSubset,
  kSpaceSubsetPair,
  kSpacePair,
  kSpacePairMap,
};

std::string_view domain_name(Domain domain);
// Largest n accepted by verify_proposition for the domain.
std::size_t domain_cap(Domain domain);

struct PropositionInfo {
  std::string_view id;         // "P01" ... "P25"
  Domain domain;
  std::string_view statement;  // what is checked
  std::string_view anchor;     // short quote of the statement being mechanized
};

std::span<const PropositionInfo> list_propositions();
// Throws UnknownProposition.
const PropositionInfo& find_proposition(std::string_view id);

struct NamedSet {
  std::string name;
  std::size_t space = 0;  // index into Witness::spaces
  PointSet set;
};

struct NamedPoint {
  std::string name;
  std::size_t space = 0;
  std::size_t point = 0;
};

struct NamedValue {
  std::string name;
  bool value = false;
};

// A concrete instance, stated on canonical forms. For map witnesses the
// assignment maps spaces[0] into spaces[1].
struct Witness {
  std::string subject;  // proposition id, "search" or a phenomenon kind
  std::vector<Topology> spaces;
  std::vector<NamedSet> sets;
  std::vector<NamedPoint> points;
  std::vector<std::size_t> assignment;
  std::string clause;              // violated or exhibited clause
  std::vector<NamedValue> values;  // recorded predicate values
};

struct VerificationReport {
  std::string prop;
  std::size_t n = 0;
  std::uint64_t checked = 0;
  std::vector<Witness> counterexamples;
  // Outcomes recorded but never asserted, such as converses that are open at
  // finite scale.
  std::map<std::string, std::uint64_t> measures;
  double elapsed_ms = 0;

  bool verified() const { return counterexamples.empty(); }
};

// Exhaustive check at size n, 1 <= n <= domain_cap. Results do not depend on
// `jobs`. Throws UnknownProposition, SizeCapExceeded.
VerificationReport verify_proposition(std::string_view id, std::size_t n, unsigned jobs = 1);

// Every proposition at min(n, its domain cap), ordered by id.
std::vector<VerificationReport> verify_all(std::size_t n, unsigned jobs = 1);

struct SearchResult {
  std::optional<Witness> witness;
  std::uint64_t visited = 0;  // labeled spaces (search) or classes (phenomena)
  std::size_t n_reached = 0;  // largest size examined
};

// Smallest space (by size, then canonical form) with every required and no
// forbidden property, over sizes n_min..n_max. When nothing is found the
// result certifies absence over that range. Throws SizeCapExceeded above the
// enumeration cap.
SearchResult search(std::span<const PropertyId> require, std::span<const PropertyId> forbid,
                    std::size_t n_max, unsigned jobs = 1, std::size_t n_min = 1);

enum class Phenomenon {
  kUnionOfLcNotLc,
  kAddClusterPointNotLc,
  kComplementOfLcNotLc,
  kClosureProductInequality,
};

std::string_view phenomenon_token(Phenomenon kind);
// Throws UnknownKind.
Phenomenon parse_phenomenon(std::string_view token);

// Smallest witness ordered by size, canonical form, then the set/point data.
SearchResult search_set_phenomena(Phenomenon kind, std::size_t n_max);

// Re-evaluates the witness through the predicates it references and returns
// true when the recorded outcome is reproduced.
bool replay(const Witness& witness);

}  // namespace lctopo
