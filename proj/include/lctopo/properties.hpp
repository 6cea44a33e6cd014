#pragma once

#include <span>
#include <string_view>

#include "lctopo/core.hpp"

namespace lctopo {

enum class PropertyId {
  kT0,
  kT1,
  kTD,
  kTHalf,
  kSubmaximal,
  kDoor,
  kPrincipal,
  kResolvable,
  kLocallyIndiscrete,
  kDiscrete,
  kIndiscrete,
  kConnected,
  kExtremallyDisconnected,
  kRegular,
  kCompletelyRegular,
  kNormal,
  kLcRegular,
  kLcCompletelyRegular,
  kLcNormal,
  kLcCompact,
};

struct PropertyInfo {
  PropertyId id;
  std::string_view token;       // stable CLI token
  std::string_view definition;  // the predicate being evaluated
};

std::span<const PropertyInfo> property_registry();
std::string_view property_token(PropertyId id);
// Throws UnknownProperty.
PropertyId parse_property(std::string_view token);

// Conventions for the empty space: every universally quantified property
// holds, Connected and Resolvable fail.
bool check_property(const Topology& space, PropertyId id);

// { x : {x} open }
PointSet isolated_points(const Topology& space);

// The subspace topology on `a` is discrete.
bool is_discrete_subspace(const Topology& space, PointSet a);

// Some clopen C has x ∈ C and C ∩ A = ∅. On a finite space this is the same
// as separating x from A by a continuous map into [0, 1]: the image is a
// finite, hence discrete, subspace of the reals, so its fibers are clopen.
bool clopen_separated(const Topology& space, std::size_t x, PointSet a);

// Finite spaces are compact; kept as a named predicate for the lc-compactness
// statements.
bool is_compact(const Topology& space);

}  // namespace lctopo
