#include "lctopo/properties.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "lctopo/locally_closed.hpp"

namespace lctopo {

namespace {

constexpr std::array<PropertyInfo, 20> kRegistry = {{
    {PropertyId::kT0, "t0", "distinct points are separated by some open set containing exactly one of them"},
    {PropertyId::kT1, "t1", "every singleton is closed"},
    {PropertyId::kTD, "td", "every singleton is locally closed"},
    {PropertyId::kTHalf, "thalf", "every singleton is either open or closed"},
    {PropertyId::kSubmaximal, "submaximal", "every dense subset is open"},
    {PropertyId::kDoor, "door", "every subset is either open or closed"},
    {PropertyId::kPrincipal, "principal", "every intersection of open sets is open"},
    {PropertyId::kResolvable, "resolvable", "there are two disjoint dense subsets"},
    {PropertyId::kLocallyIndiscrete, "locally-indiscrete", "every open set is closed"},
    {PropertyId::kDiscrete, "discrete", "every subset is open"},
    {PropertyId::kIndiscrete, "indiscrete", "the only open sets are the empty set and the whole space"},
    {PropertyId::kConnected, "connected", "nonempty with no clopen set other than the empty set and the whole space"},
    {PropertyId::kExtremallyDisconnected, "extremally-disconnected", "the closure of every open set is open"},
    {PropertyId::kRegular, "regular", "a closed set and a point outside it have disjoint open neighborhoods"},
    {PropertyId::kCompletelyRegular, "completely-regular",
     "a closed set and a point outside it are separated by a continuous map into [0,1]"},
    {PropertyId::kNormal, "normal", "disjoint closed sets have disjoint open neighborhoods"},
    {PropertyId::kLcRegular, "lc-regular",
     "a locally closed set and a point outside it have disjoint open neighborhoods"},
    {PropertyId::kLcCompletelyRegular, "lc-completely-regular",
     "a locally closed set and a point outside it are separated by a continuous map into [0,1]"},
    {PropertyId::kLcNormal, "lc-normal", "disjoint locally closed sets have disjoint open neighborhoods"},
    {PropertyId::kLcCompact, "lc-compact", "every cover by locally closed sets has a finite subcover"},
}};

bool singleton_test(const Topology& space, bool (*test)(const Topology&, PointSet)) {
  for (std::size_t x = 0; x < space.size(); ++x) {
    if (!test(space, PointSet::singleton(x, space.size()))) return false;
  }
  return true;
}

template <typename Test>
bool every_subset(const Topology& space, Test test) {
  const std::size_t subsets = std::size_t{1} << space.size();
  for (std::size_t u = 0; u < subsets; ++u) {
    if (!test(space.set(static_cast<Mask>(u)))) return false;
  }
  return true;
}

std::vector<PointSet> closed_sets(const Topology& space) {
  std::vector<PointSet> out;
  for (const PointSet& open : space.opens()) out.push_back(open.complement());
  return out;
}

// x ∉ A is separated from A by disjoint opens iff M_x misses the open hull of A.
bool point_set_separated(const Topology& space, std::span<const PointSet> sets) {
  for (const PointSet& a : sets) {
    const Mask hull = space.open_hull(a.bits());
    for (std::size_t x = 0; x < space.size(); ++x) {
      if (a.contains(x)) continue;
      if ((space.neighborhood(x) & hull) != 0) return false;
    }
  }
  return true;
}

bool point_set_clopen_separated(const Topology& space, std::span<const PointSet> sets) {
  for (const PointSet& a : sets) {
    for (std::size_t x = 0; x < space.size(); ++x) {
      if (!a.contains(x) && !clopen_separated(space, x, a)) return false;
    }
  }
  return true;
}

bool set_set_separated(const Topology& space, std::span<const PointSet> sets) {
  for (const PointSet& a : sets) {
    for (const PointSet& b : sets) {
      if (a.intersects(b)) continue;
      if ((space.open_hull(a.bits()) & space.open_hull(b.bits())) != 0) return false;
    }
  }
  return true;
}

}  // namespace

std::span<const PropertyInfo> property_registry() { return kRegistry; }

std::string_view property_token(PropertyId id) {
  for (const auto& info : kRegistry) {
    if (info.id == id) return info.token;
  }
  return "?";
}

PropertyId parse_property(std::string_view token) {
  for (const auto& info : kRegistry) {
    if (info.token == token) return info.id;
  }
  throw TopologyError(ErrorCode::kUnknownProperty, std::string(token));
}

PointSet isolated_points(const Topology& space) {
  Mask out = 0;
  for (std::size_t x = 0; x < space.size(); ++x) {
    if (space.neighborhood(x) == (Mask{1} << x)) out |= Mask{1} << x;
  }
  return space.set(out);
}

bool is_discrete_subspace(const Topology& space, PointSet a) {
  check_subset(space, a);
  for (std::size_t x : a.members()) {
    if ((space.neighborhood(x) & a.bits()) != (Mask{1} << x)) return false;
  }
  return true;
}

bool clopen_separated(const Topology& space, std::size_t x, PointSet a) {
  check_point(space, x);
  check_subset(space, a);
  for (const PointSet& c : space.opens()) {
    if (c.contains(x) && !c.intersects(a) && space.is_closed(c)) return true;
  }
  return false;
}

bool is_compact(const Topology&) {
  // Any open cover is a subfamily of the finitely many open sets, so it is
  // already a finite subcover.
  return true;
}

bool check_property(const Topology& space, PropertyId id) {
  const std::size_t n = space.size();
  switch (id) {
    case PropertyId::kT0:
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
          if (space.neighborhood(x) == space.neighborhood(y)) return false;
        }
      }
      return true;
    case PropertyId::kT1:
      return singleton_test(space, [](const Topology& s, PointSet p) { return s.is_closed(p); });
    case PropertyId::kTD:
      return singleton_test(space, [](const Topology& s, PointSet p) { return is_locally_closed(s, p); });
    case PropertyId::kTHalf:
      return singleton_test(space,
                            [](const Topology& s, PointSet p) { return s.is_open(p) || s.is_closed(p); });
    case PropertyId::kSubmaximal:
      return every_subset(space, [&](PointSet a) {
        return closure(space, a) != space.whole() || space.is_open(a);
      });
    case PropertyId::kDoor:
      return every_subset(space, [&](PointSet a) { return space.is_open(a) || space.is_closed(a); });
    case PropertyId::kPrincipal: {
      // Any intersection I of opens is the union of M_x over x in I, so it is
      // open as soon as every M_x is a member of the family.
      const auto opens = space.open_masks();
      for (std::size_t x = 0; x < n; ++x) {
        if (!std::binary_search(opens.begin(), opens.end(), space.neighborhood(x))) return false;
      }
      return true;
    }
    case PropertyId::kResolvable:
      if (n == 0) return false;
      return !every_subset(space, [&](PointSet a) {
        return !(closure(space, a) == space.whole() && closure(space, a.complement()) == space.whole());
      });
    case PropertyId::kLocallyIndiscrete:
      for (const PointSet& open : space.opens()) {
        if (!space.is_closed(open)) return false;
      }
      return true;
    case PropertyId::kDiscrete:
      return isolated_points(space) == space.whole();
    case PropertyId::kIndiscrete:
      return space.open_count() == (n == 0 ? 1U : 2U);
    case PropertyId::kConnected:
      if (n == 0) return false;
      for (const PointSet& open : space.opens()) {
        if (!open.empty() && open != space.whole() && space.is_closed(open)) return false;
      }
      return true;
    case PropertyId::kExtremallyDisconnected:
      for (const PointSet& open : space.opens()) {
        if (!space.is_open(closure(space, open))) return false;
      }
      return true;
    case PropertyId::kRegular:
      return point_set_separated(space, closed_sets(space));
    case PropertyId::kCompletelyRegular:
      return point_set_clopen_separated(space, closed_sets(space));
    case PropertyId::kNormal:
      return set_set_separated(space, closed_sets(space));
    case PropertyId::kLcRegular:
      return point_set_separated(space, locally_closed_family(space));
    case PropertyId::kLcCompletelyRegular:
      return point_set_clopen_separated(space, locally_closed_family(space));
    case PropertyId::kLcNormal:
      return set_set_separated(space, locally_closed_family(space));
    case PropertyId::kLcCompact:
      return is_compact(tl_topology(space));
  }
  throw TopologyError(ErrorCode::kUnknownProperty, std::to_string(static_cast<int>(id)));
}

}  // namespace lctopo
