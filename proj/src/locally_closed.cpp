#include "lctopo/locally_closed.hpp"

#include <algorithm>

namespace lctopo {

namespace {

Mask closure_bits(const Topology& space, Mask a) {
  Mask out = 0;
  for (std::size_t x = 0; x < space.size(); ++x) {
    if ((space.neighborhood(x) & a) != 0) out |= Mask{1} << x;
  }
  return out;
}

bool open_bits(const Topology& space, Mask a) { return space.open_hull(a) == a; }

bool closed_bits(const Topology& space, Mask a) {
  return open_bits(space, full_mask(space.size()) & ~a);
}

bool lc_bits(const Topology& space, Mask a) {
  return closed_bits(space, closure_bits(space, a) & ~a);
}

std::vector<Mask> closed_masks(const Topology& space) {
  const Mask whole = full_mask(space.size());
  std::vector<Mask> closed;
  closed.reserve(space.open_count());
  for (Mask open : space.open_masks()) closed.push_back(whole & ~open);
  std::sort(closed.begin(), closed.end());
  return closed;
}

}  // namespace

bool is_locally_closed(const Topology& space, PointSet a) {
  check_subset(space, a);
  return lc_bits(space, a.bits());
}

std::vector<LcDecomposition> lc_decompositions(const Topology& space, PointSet a) {
  check_subset(space, a);
  std::vector<LcDecomposition> out;
  if (!lc_bits(space, a.bits())) return out;
  const std::vector<Mask> closed = closed_masks(space);
  for (Mask g : space.open_masks()) {
    if ((a.bits() & ~g) != 0) continue;
    for (Mask f : closed) {
      if ((g & f) == a.bits()) out.push_back({space.set(g), space.set(f)});
    }
  }
  return out;
}

std::vector<PointSet> locally_closed_family(const Topology& space) {
  const std::size_t n = space.size();
  const std::size_t subsets = std::size_t{1} << n;
  const std::size_t pairs = space.open_count() * space.open_count();
  std::vector<Mask> family;
  if (pairs < subsets) {
    const Mask whole = full_mask(n);
    for (Mask g : space.open_masks()) {
      for (Mask h : space.open_masks()) family.push_back(g & (whole & ~h));
    }
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
  } else {
    for (std::size_t u = 0; u < subsets; ++u) {
      if (lc_bits(space, static_cast<Mask>(u))) family.push_back(static_cast<Mask>(u));
    }
  }
  std::vector<PointSet> out;
  out.reserve(family.size());
  for (Mask m : family) out.push_back(space.set(m));
  return out;
}

Topology tl_topology(const Topology& space) {
  return generate_from_subbase(space.ground(), locally_closed_family(space));
}

namespace lc_criteria {

std::string_view name(Criterion criterion) {
  switch (criterion) {
    case Criterion::kPointwise: return "a";
    case Criterion::kOpenMeetsClosed: return "b";
    case Criterion::kOpenMeetsClosure: return "c";
    case Criterion::kClosedMinusClosed: return "d";
    case Criterion::kClosureGapClosed: return "e";
    case Criterion::kInsideInterior: return "f";
    case Criterion::kPaddedOpen: return "g";
  }
  return "?";
}

bool holds(Criterion criterion, const Topology& space, PointSet a) {
  check_subset(space, a);
  const PointSet whole = space.whole();
  switch (criterion) {
    case Criterion::kPointwise: {
      // A ∩ U is closed in the subspace U iff cl(A ∩ U) ∩ U = A ∩ U.
      for (std::size_t x : a.members()) {
        bool found = false;
        for (Mask u : space.open_masks()) {
          if (((u >> x) & 1U) == 0) continue;
          const PointSet trace = a & space.set(u);
          if ((closure(space, trace) & space.set(u)) == trace) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
      return true;
    }
    case Criterion::kOpenMeetsClosed: {
      for (const PointSet& g : space.opens()) {
        for (const PointSet& h : space.opens()) {
          if ((g & h.complement()) == a) return true;
        }
      }
      return false;
    }
    case Criterion::kOpenMeetsClosure: {
      const PointSet cl = closure(space, a);
      for (const PointSet& h : space.opens()) {
        if ((h & cl) == a) return true;
      }
      return false;
    }
    case Criterion::kClosedMinusClosed: {
      for (const PointSet& g : space.opens()) {
        for (const PointSet& h : space.opens()) {
          if ((g.complement() - h.complement()) == a) return true;
        }
      }
      return false;
    }
    case Criterion::kClosureGapClosed:
      return space.is_closed(closure(space, a) - a);
    case Criterion::kInsideInterior: {
      const PointSet padded = a | (whole - closure(space, a));
      return a.is_subset_of(interior(space, padded));
    }
    case Criterion::kPaddedOpen:
      return space.is_open(a | (whole - closure(space, a)));
  }
  return false;
}

}  // namespace lc_criteria

}  // namespace lctopo
