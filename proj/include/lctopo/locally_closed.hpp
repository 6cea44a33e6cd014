#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "lctopo/core.hpp"

namespace lctopo {

// A = open_part ∩ closed_part.
struct LcDecomposition {
  PointSet open_part;
  PointSet closed_part;

  friend bool operator==(const LcDecomposition&, const LcDecomposition&) = default;
};

// cl(A) \ A is closed.
bool is_locally_closed(const Topology& space, PointSet a);

// Every (G, F) with G open, F closed and G ∩ F = A, ordered by (G, F).
// Empty exactly when A is not locally closed.
std::vector<LcDecomposition> lc_decompositions(const Topology& space, PointSet a);

// All locally closed subsets, sorted ascending.
std::vector<PointSet> locally_closed_family(const Topology& space);

// Topology whose base is the locally closed family. Refines `space`.
Topology tl_topology(const Topology& space);

// Independent characterizations of local closedness. Only the test suites use
// these; is_locally_closed is the fast path.
namespace lc_criteria {

enum class Criterion {
  kPointwise,           // each x in A has an open U with A ∩ U closed in U
  kOpenMeetsClosed,     // A = G ∩ F, G open, F closed
  kOpenMeetsClosure,    // A = H ∩ cl(A), H open
  kClosedMinusClosed,   // A = E \ F, E and F closed
  kClosureGapClosed,    // cl(A) \ A closed
  kInsideInterior,      // A ⊆ int(A ∪ (X \ cl A))
  kPaddedOpen,          // A ∪ (X \ cl A) open
};

inline constexpr std::array<Criterion, 7> kAll = {
    Criterion::kPointwise,         Criterion::kOpenMeetsClosed, Criterion::kOpenMeetsClosure,
    Criterion::kClosedMinusClosed, Criterion::kClosureGapClosed, Criterion::kInsideInterior,
    Criterion::kPaddedOpen,
};

std::string_view name(Criterion criterion);
bool holds(Criterion criterion, const Topology& space, PointSet a);

}  // namespace lc_criteria

}  // namespace lctopo
