#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "lctopo/core.hpp"

namespace lctopo {

// Largest source/target size accepted by for_each_assignment.
inline constexpr std::size_t kMaxMapPoints = 4;

class FiniteMap {
 public:
  // Throws MalformedFile if the assignment is not total on the source and
  // ForeignPoint if it names a point outside the target.
  FiniteMap(Topology source, Topology target, std::vector<std::size_t> assignment);

  const Topology& source() const { return source_; }
  const Topology& target() const { return target_; }
  std::span<const std::size_t> assignment() const { return assignment_; }
  std::size_t operator()(std::size_t x) const { return assignment_[x]; }

 private:
  Topology source_;
  Topology target_;
  std::vector<std::size_t> assignment_;
};

struct MapClassification {
  bool continuous = false;
  bool lc_continuous = false;
  bool open_map = false;
  bool closed_map = false;
  bool locally_closed_map = false;
  bool injective = false;
  bool surjective = false;
  bool homeomorphism = false;

  // (name, value) in declaration order; names match the CLI output keys.
  std::vector<std::pair<std::string_view, bool>> flags() const;

  friend bool operator==(const MapClassification&, const MapClassification&) = default;
};

PointSet image(const FiniteMap& f, PointSet a);
PointSet preimage(const FiniteMap& f, PointSet b);

MapClassification classify_map(const FiniteMap& f);

// A homeomorphism X -> Y as an assignment, the first one in lexicographic
// order, or nothing.
std::optional<std::vector<std::size_t>> are_homeomorphic(const Topology& x, const Topology& y);

// Calls visit with every assignment {0..source_size-1} -> {0..target_size-1}
// in lexicographic order. Throws SizeCapExceeded above kMaxMapPoints.
void for_each_assignment(std::size_t source_size, std::size_t target_size,
                         const std::function<void(std::span<const std::size_t>)>& visit);

}  // namespace lctopo
