#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lctopo/error.hpp"

namespace lctopo {

// Bit i is point i of the ground set.
using Mask = std::uint32_t;

// Hard limit for set operations (2^16 subsets must stay iterable).
inline constexpr std::size_t kMaxPoints = 16;

inline constexpr Mask full_mask(std::size_t n) {
  return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1;
}

// Ordered, duplicate-free point labels. Copies share storage.
class GroundSet {
 public:
  GroundSet();
  explicit GroundSet(std::vector<std::string> labels);

  // Labels "a", "b", "c", ... for n points.
  static GroundSet standard(std::size_t n);

  std::size_t size() const { return labels_->size(); }
  const std::string& label(std::size_t i) const { return (*labels_)[i]; }
  std::span<const std::string> labels() const { return *labels_; }
  std::optional<std::size_t> index_of(std::string_view label) const;
  // Throws ForeignPoint when the label is not a point of this set.
  std::size_t index_or_throw(std::string_view label) const;
  Mask all() const { return full_mask(size()); }

  friend bool operator==(const GroundSet& a, const GroundSet& b);

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

// A subset of a ground set of `universe` points.
class PointSet {
 public:
  constexpr PointSet() = default;
  constexpr PointSet(Mask bits, std::size_t universe)
      : bits_(bits), universe_(static_cast<std::uint8_t>(universe)) {}

  static constexpr PointSet none(std::size_t n) { return {0, n}; }
  static constexpr PointSet all(std::size_t n) { return {full_mask(n), n}; }
  static constexpr PointSet singleton(std::size_t i, std::size_t n) { return {Mask{1} << i, n}; }
  // Throws ForeignPoint on unknown labels.
  static PointSet from_labels(const GroundSet& ground, std::span<const std::string> labels);

  constexpr Mask bits() const { return bits_; }
  constexpr std::size_t universe() const { return universe_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr bool is_subset_of(PointSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(PointSet other) const { return (bits_ & other.bits_) != 0; }
  constexpr PointSet complement() const { return {full_mask(universe_) & ~bits_, universe_}; }
  constexpr PointSet with(std::size_t i) const { return {bits_ | (Mask{1} << i), universe_}; }
  constexpr PointSet without(std::size_t i) const { return {bits_ & ~(Mask{1} << i), universe_}; }

  std::vector<std::size_t> members() const;
  std::vector<std::string> labels(const GroundSet& ground) const;

  friend constexpr PointSet operator|(PointSet a, PointSet b) { return {a.bits_ | b.bits_, a.universe_}; }
  friend constexpr PointSet operator&(PointSet a, PointSet b) { return {a.bits_ & b.bits_, a.universe_}; }
  friend constexpr PointSet operator-(PointSet a, PointSet b) { return {a.bits_ & ~b.bits_, a.universe_}; }
  friend constexpr bool operator==(PointSet a, PointSet b) = default;
  friend constexpr auto operator<=>(PointSet a, PointSet b) {
    return a.bits_ == b.bits_ ? a.universe_ <=> b.universe_ : a.bits_ <=> b.bits_;
  }

 private:
  Mask bits_ = 0;
  std::uint8_t universe_ = 0;
};

// A finite topology. Opens are stored sorted ascending by mask value and are
// always a valid topology: construct through validate_topology or one of the
// generators below.
class Topology {
 public:
  // The empty space.
  Topology();

  const GroundSet& ground() const { return ground_; }
  std::size_t size() const { return ground_.size(); }
  std::span<const Mask> open_masks() const { return opens_; }
  std::size_t open_count() const { return opens_.size(); }
  std::vector<PointSet> opens() const;

  PointSet set(Mask bits) const { return {bits, size()}; }
  PointSet whole() const { return PointSet::all(size()); }
  PointSet nothing() const { return PointSet::none(size()); }

  // Smallest open containing x.
  Mask neighborhood(std::size_t x) const { return neighborhoods_[x]; }
  // Smallest open containing every point of `bits`.
  Mask open_hull(Mask bits) const;

  bool is_open(PointSet a) const;
  bool is_closed(PointSet a) const { return is_open(a.complement()); }

  friend bool operator==(const Topology& a, const Topology& b);

  // Builds from an already valid, sorted, duplicate-free family.
  static Topology from_valid_opens(GroundSet ground, std::vector<Mask> opens);

 private:
  GroundSet ground_;
  std::vector<Mask> opens_;
  std::array<Mask, kMaxPoints> neighborhoods_{};
};

// Specialization preorder. row(x) holds { y : x <= y }, x <= y iff x in cl{y}.
class Preorder {
 public:
  // Throws RelationNotReflexive / RelationNotTransitive.
  Preorder(GroundSet ground, std::vector<Mask> rows);

  const GroundSet& ground() const { return ground_; }
  std::size_t size() const { return ground_.size(); }
  std::span<const Mask> rows() const { return rows_; }
  bool leq(std::size_t x, std::size_t y) const { return (rows_[x] >> y) & 1U; }

  friend bool operator==(const Preorder& a, const Preorder& b) { return a.rows_ == b.rows_; }

 private:
  GroundSet ground_;
  std::vector<Mask> rows_;
};

struct SetClassification {
  bool open = false;
  bool closed = false;
  bool clopen = false;
  bool dense = false;
  bool preopen = false;
  bool regular_open = false;
};

// Throws ForeignPoint when `a` is not a subset of X's ground set.
void check_subset(const Topology& space, PointSet a);
void check_point(const Topology& space, std::size_t x);

Topology validate_topology(const GroundSet& ground, std::span<const PointSet> family);

PointSet closure(const Topology& space, PointSet a);
PointSet interior(const Topology& space, PointSet a);
PointSet boundary(const Topology& space, PointSet a);
PointSet derived_set(const Topology& space, PointSet a);
SetClassification classify_set(const Topology& space, PointSet a);
PointSet minimal_neighborhood(const Topology& space, std::size_t x);

Preorder specialization_preorder(const Topology& space);
// Opens are the up-closed sets: x in U and x <= y imply y in U.
Topology topology_from_preorder(const Preorder& order);
// Smallest topology containing `family`.
Topology generate_from_subbase(const GroundSet& ground, std::span<const PointSet> family);
// Opens are all U with U = union of nbhd[x] over x in U. nbhd must be the
// rows of a preorder.
Topology topology_from_neighborhoods(const GroundSet& ground, std::span<const Mask> nbhd);

Topology discrete_space(std::size_t n);
Topology indiscrete_space(std::size_t n);
Topology discrete_space(const GroundSet& ground);
Topology indiscrete_space(const GroundSet& ground);

// Moves point i to position perm[i]. Labels stay in place, so the result is a
// homeomorphic copy on the same ground set.
Mask permute_mask(Mask bits, std::span<const std::size_t> perm);
Topology relabel(const Topology& space, std::span<const std::size_t> perm);

}  // namespace lctopo
