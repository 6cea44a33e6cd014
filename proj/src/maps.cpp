#include "lctopo/maps.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lctopo/locally_closed.hpp"
#include "lctopo/properties.hpp"

namespace lctopo {

namespace {

Mask image_bits(std::span<const std::size_t> assignment, Mask a) {
  Mask out = 0;
  for (Mask rest = a; rest != 0; rest &= rest - 1) {
    out |= Mask{1} << assignment[static_cast<std::size_t>(std::countr_zero(rest))];
  }
  return out;
}

Mask preimage_bits(std::span<const std::size_t> assignment, Mask b) {
  Mask out = 0;
  for (std::size_t x = 0; x < assignment.size(); ++x) {
    if ((b >> assignment[x]) & 1U) out |= Mask{1} << x;
  }
  return out;
}

struct Signature {
  std::vector<std::size_t> open_sizes;
  std::vector<std::size_t> neighborhood_sizes;
  std::size_t isolated = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

Signature signature(const Topology& space) {
  Signature sig;
  for (Mask m : space.open_masks()) sig.open_sizes.push_back(static_cast<std::size_t>(std::popcount(m)));
  std::sort(sig.open_sizes.begin(), sig.open_sizes.end());
  for (std::size_t x = 0; x < space.size(); ++x) {
    sig.neighborhood_sizes.push_back(static_cast<std::size_t>(std::popcount(space.neighborhood(x))));
  }
  std::sort(sig.neighborhood_sizes.begin(), sig.neighborhood_sizes.end());
  sig.isolated = isolated_points(space).count();
  return sig;
}

}  // namespace

FiniteMap::FiniteMap(Topology source, Topology target, std::vector<std::size_t> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  if (assignment_.size() != source_.size()) {
    throw TopologyError(ErrorCode::kMalformedFile,
                        "map assigns " + std::to_string(assignment_.size()) + " of " +
                            std::to_string(source_.size()) + " source points");
  }
  for (std::size_t y : assignment_) {
    if (y >= target_.size()) {
      throw TopologyError(ErrorCode::kForeignPoint, "target index " + std::to_string(y));
    }
  }
}

std::vector<std::pair<std::string_view, bool>> MapClassification::flags() const {
  return {{"continuous", continuous},
          {"lc_continuous", lc_continuous},
          {"open_map", open_map},
          {"closed_map", closed_map},
          {"locally_closed_map", locally_closed_map},
          {"injective", injective},
          {"surjective", surjective},
          {"homeomorphism", homeomorphism}};
}

PointSet image(const FiniteMap& f, PointSet a) {
  check_subset(f.source(), a);
  return f.target().set(image_bits(f.assignment(), a.bits()));
}

PointSet preimage(const FiniteMap& f, PointSet b) {
  check_subset(f.target(), b);
  return f.source().set(preimage_bits(f.assignment(), b.bits()));
}

MapClassification classify_map(const FiniteMap& f) {
  const Topology& x = f.source();
  const Topology& y = f.target();
  const auto assignment = f.assignment();
  MapClassification c;

  c.continuous = true;
  c.lc_continuous = true;
  for (Mask v : y.open_masks()) {
    const PointSet pre = x.set(preimage_bits(assignment, v));
    c.continuous = c.continuous && x.is_open(pre);
    c.lc_continuous = c.lc_continuous && is_locally_closed(x, pre);
  }

  c.open_map = true;
  c.closed_map = true;
  for (Mask u : x.open_masks()) {
    c.open_map = c.open_map && y.is_open(y.set(image_bits(assignment, u)));
    const Mask closed = full_mask(x.size()) & ~u;
    c.closed_map = c.closed_map && y.is_closed(y.set(image_bits(assignment, closed)));
  }

  c.locally_closed_map = true;
  for (const PointSet& a : locally_closed_family(x)) {
    if (!is_locally_closed(y, y.set(image_bits(assignment, a.bits())))) {
      c.locally_closed_map = false;
      break;
    }
  }

  const Mask hit = image_bits(assignment, full_mask(x.size()));
  c.surjective = hit == full_mask(y.size());
  c.injective = static_cast<std::size_t>(std::popcount(hit)) == x.size();
  c.homeomorphism = c.injective && c.surjective && c.continuous && c.open_map;
  return c;
}

std::optional<std::vector<std::size_t>> are_homeomorphic(const Topology& x, const Topology& y) {
  if (x.size() != y.size() || x.open_count() != y.open_count()) return std::nullopt;
  if (!(signature(x) == signature(y))) return std::nullopt;

  const auto target_opens = y.open_masks();
  std::vector<std::size_t> perm(x.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool fits = true;
    for (std::size_t p = 0; p < x.size() && fits; ++p) {
      fits = std::popcount(x.neighborhood(p)) == std::popcount(y.neighborhood(perm[p]));
    }
    if (!fits) continue;
    // A bijection carrying opens into opens hits all of them, since the
    // families have equal size.
    for (Mask u : x.open_masks()) {
      if (!std::binary_search(target_opens.begin(), target_opens.end(), permute_mask(u, perm))) {
        fits = false;
        break;
      }
    }
    if (fits) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

void for_each_assignment(std::size_t source_size, std::size_t target_size,
                         const std::function<void(std::span<const std::size_t>)>& visit) {
  if (source_size > kMaxMapPoints || target_size > kMaxMapPoints) {
    throw TopologyError(ErrorCode::kSizeCapExceeded,
                        "map enumeration is limited to " + std::to_string(kMaxMapPoints) + " points");
  }
  if (source_size > 0 && target_size == 0) return;
  std::vector<std::size_t> assignment(source_size, 0);
  while (true) {
    visit(assignment);
    std::size_t i = source_size;
    while (i > 0) {
      --i;
      if (++assignment[i] < target_size) break;
      assignment[i] = 0;
      if (i == 0) return;
    }
    if (source_size == 0) return;
  }
}

}  // namespace lctopo
