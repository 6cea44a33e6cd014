#include "lctopo/core.hpp"

#include <algorithm>
#include <array>

namespace lctopo {

namespace {

std::shared_ptr<const std::vector<std::string>> empty_labels() {
  static const auto labels = std::make_shared<const std::vector<std::string>>();
  return labels;
}

std::string format_set(const GroundSet& ground, Mask bits) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if ((bits >> i) & 1U) {
      if (!first) out += ',';
      out += ground.label(i);
      first = false;
    }
  }
  return out + "}";
}

}  // namespace

GroundSet::GroundSet() : labels_(empty_labels()) {}

GroundSet::GroundSet(std::vector<std::string> labels) {
  if (labels.size() > kMaxPoints) {
    throw TopologyError(ErrorCode::kSizeCapExceeded,
                        std::to_string(labels.size()) + " points exceeds the cap of " +
                            std::to_string(kMaxPoints));
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (labels[i] == labels[j]) throw TopologyError(ErrorCode::kDuplicateLabel, labels[i]);
    }
  }
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

GroundSet GroundSet::standard(std::size_t n) {
  static const std::array<GroundSet, kMaxPoints + 1> cache = [] {
    std::array<GroundSet, kMaxPoints + 1> sets;
    for (std::size_t k = 0; k <= kMaxPoints; ++k) {
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < k; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
      sets[k] = GroundSet(std::move(labels));
    }
    return sets;
  }();
  if (n > kMaxPoints) {
    throw TopologyError(ErrorCode::kSizeCapExceeded, std::to_string(n) + " points");
  }
  return cache[n];
}

std::optional<std::size_t> GroundSet::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_->size(); ++i) {
    if ((*labels_)[i] == label) return i;
  }
  return std::nullopt;
}

std::size_t GroundSet::index_or_throw(std::string_view label) const {
  if (auto i = index_of(label)) return *i;
  throw TopologyError(ErrorCode::kForeignPoint, std::string(label));
}

bool operator==(const GroundSet& a, const GroundSet& b) {
  return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
}

PointSet PointSet::from_labels(const GroundSet& ground, std::span<const std::string> labels) {
  Mask bits = 0;
  for (const auto& label : labels) bits |= Mask{1} << ground.index_or_throw(label);
  return {bits, ground.size()};
}

std::vector<std::size_t> PointSet::members() const {
  std::vector<std::size_t> out;
  for (Mask rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
  }
  return out;
}

std::vector<std::string> PointSet::labels(const GroundSet& ground) const {
  std::vector<std::string> out;
  for (std::size_t i : members()) out.push_back(ground.label(i));
  return out;
}

Topology::Topology() : opens_{0} {}

Topology Topology::from_valid_opens(GroundSet ground, std::vector<Mask> opens) {
  Topology t;
  t.ground_ = std::move(ground);
  t.opens_ = std::move(opens);
  const std::size_t n = t.ground_.size();
  for (std::size_t x = 0; x < n; ++x) {
    Mask m = full_mask(n);
    for (Mask open : t.opens_) {
      if ((open >> x) & 1U) m &= open;
    }
    t.neighborhoods_[x] = m;
  }
  return t;
}

std::vector<PointSet> Topology::opens() const {
  std::vector<PointSet> out;
  out.reserve(opens_.size());
  for (Mask m : opens_) out.emplace_back(m, size());
  return out;
}

Mask Topology::open_hull(Mask bits) const {
  Mask hull = 0;
  for (Mask rest = bits; rest != 0; rest &= rest - 1) {
    hull |= neighborhoods_[static_cast<std::size_t>(std::countr_zero(rest))];
  }
  return hull;
}

bool Topology::is_open(PointSet a) const { return open_hull(a.bits()) == a.bits(); }

bool operator==(const Topology& a, const Topology& b) {
  return a.opens_ == b.opens_ && a.ground_ == b.ground_;
}

Preorder::Preorder(GroundSet ground, std::vector<Mask> rows)
    : ground_(std::move(ground)), rows_(std::move(rows)) {
  const std::size_t n = ground_.size();
  if (rows_.size() != n) {
    throw TopologyError(ErrorCode::kMalformedFile, "relation has " + std::to_string(rows_.size()) +
                                                       " rows for " + std::to_string(n) + " points");
  }
  for (std::size_t x = 0; x < n; ++x) {
    if ((rows_[x] & ~full_mask(n)) != 0) {
      throw TopologyError(ErrorCode::kForeignPoint, "relation row " + ground_.label(x));
    }
    if (!leq(x, x)) throw TopologyError(ErrorCode::kRelationNotReflexive, ground_.label(x));
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (leq(x, y) && (rows_[y] & ~rows_[x]) != 0) {
        const auto z = static_cast<std::size_t>(std::countr_zero(rows_[y] & ~rows_[x]));
        throw TopologyError(ErrorCode::kRelationNotTransitive,
                            ground_.label(x) + "<=" + ground_.label(y) + "<=" + ground_.label(z));
      }
    }
  }
}

void check_subset(const Topology& space, PointSet a) {
  if (a.universe() != space.size() || (a.bits() & ~full_mask(space.size())) != 0) {
    throw TopologyError(ErrorCode::kForeignPoint,
                        "set over " + std::to_string(a.universe()) + " points used in a " +
                            std::to_string(space.size()) + "-point space");
  }
}

void check_point(const Topology& space, std::size_t x) {
  if (x >= space.size()) {
    throw TopologyError(ErrorCode::kForeignPoint, "point index " + std::to_string(x));
  }
}

Topology validate_topology(const GroundSet& ground, std::span<const PointSet> family) {
  const std::size_t n = ground.size();
  const Mask whole = full_mask(n);
  std::vector<Mask> opens;
  opens.reserve(family.size());
  for (const PointSet& member : family) {
    if (member.universe() != n || (member.bits() & ~whole) != 0) {
      throw TopologyError(ErrorCode::kForeignPoint, "family member is not a subset of the ground set");
    }
    opens.push_back(member.bits());
  }
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());

  const auto has = [&](Mask m) { return std::binary_search(opens.begin(), opens.end(), m); };
  if (!has(0)) throw TopologyError(ErrorCode::kMissingEmpty, "{}");
  if (!has(whole)) throw TopologyError(ErrorCode::kMissingWhole, format_set(ground, whole));
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      if (!has(opens[i] | opens[j])) {
        throw TopologyError(ErrorCode::kNotClosedUnderUnion,
                            format_set(ground, opens[i]) + "," + format_set(ground, opens[j]));
      }
    }
  }
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      if (!has(opens[i] & opens[j])) {
        throw TopologyError(ErrorCode::kNotClosedUnderIntersection,
                            format_set(ground, opens[i]) + "," + format_set(ground, opens[j]));
      }
    }
  }
  return Topology::from_valid_opens(ground, std::move(opens));
}

PointSet closure(const Topology& space, PointSet a) {
  check_subset(space, a);
  Mask out = 0;
  for (std::size_t x = 0; x < space.size(); ++x) {
    if ((space.neighborhood(x) & a.bits()) != 0) out |= Mask{1} << x;
  }
  return space.set(out);
}

PointSet interior(const Topology& space, PointSet a) {
  check_subset(space, a);
  Mask out = 0;
  for (std::size_t x = 0; x < space.size(); ++x) {
    if ((space.neighborhood(x) & ~a.bits()) == 0) out |= Mask{1} << x;
  }
  return space.set(out);
}

PointSet boundary(const Topology& space, PointSet a) {
  return closure(space, a) - interior(space, a);
}

PointSet derived_set(const Topology& space, PointSet a) {
  check_subset(space, a);
  Mask out = 0;
  for (std::size_t x = 0; x < space.size(); ++x) {
    const Mask others = a.bits() & ~(Mask{1} << x);
    if ((space.neighborhood(x) & others) != 0) out |= Mask{1} << x;
  }
  return space.set(out);
}

SetClassification classify_set(const Topology& space, PointSet a) {
  check_subset(space, a);
  SetClassification c;
  c.open = space.is_open(a);
  c.closed = space.is_closed(a);
  c.clopen = c.open && c.closed;
  const PointSet cl = closure(space, a);
  c.dense = cl == space.whole();
  const PointSet int_cl = interior(space, cl);
  c.preopen = a.is_subset_of(int_cl);
  c.regular_open = a == int_cl;
  return c;
}

PointSet minimal_neighborhood(const Topology& space, std::size_t x) {
  check_point(space, x);
  return space.set(space.neighborhood(x));
}

Preorder specialization_preorder(const Topology& space) {
  std::vector<Mask> rows(space.size());
  for (std::size_t x = 0; x < space.size(); ++x) rows[x] = space.neighborhood(x);
  return Preorder(space.ground(), std::move(rows));
}

Topology topology_from_preorder(const Preorder& order) {
  return topology_from_neighborhoods(order.ground(), order.rows());
}

Topology topology_from_neighborhoods(const GroundSet& ground, std::span<const Mask> nbhd) {
  const std::size_t n = ground.size();
  const std::size_t subsets = std::size_t{1} << n;
  thread_local std::vector<Mask> hull;
  hull.resize(subsets);
  hull[0] = 0;
  std::vector<Mask> opens{0};
  for (std::size_t u = 1; u < subsets; ++u) {
    const auto low = static_cast<std::size_t>(std::countr_zero(u));
    hull[u] = hull[u & (u - 1)] | nbhd[low];
    if (hull[u] == u) opens.push_back(static_cast<Mask>(u));
  }
  return Topology::from_valid_opens(ground, std::move(opens));
}

Topology generate_from_subbase(const GroundSet& ground, std::span<const PointSet> family) {
  const std::size_t n = ground.size();
  std::vector<Mask> nbhd(n, full_mask(n));
  for (const PointSet& member : family) {
    if (member.universe() != n || (member.bits() & ~full_mask(n)) != 0) {
      throw TopologyError(ErrorCode::kForeignPoint, "subbase member is not a subset of the ground set");
    }
    for (std::size_t x : member.members()) nbhd[x] &= member.bits();
  }
  return topology_from_neighborhoods(ground, nbhd);
}

Topology discrete_space(const GroundSet& ground) {
  std::vector<Mask> opens(std::size_t{1} << ground.size());
  for (std::size_t u = 0; u < opens.size(); ++u) opens[u] = static_cast<Mask>(u);
  return Topology::from_valid_opens(ground, std::move(opens));
}

Topology indiscrete_space(const GroundSet& ground) {
  std::vector<Mask> opens{0};
  if (ground.size() > 0) opens.push_back(ground.all());
  return Topology::from_valid_opens(ground, std::move(opens));
}

Topology discrete_space(std::size_t n) { return discrete_space(GroundSet::standard(n)); }
Topology indiscrete_space(std::size_t n) { return indiscrete_space(GroundSet::standard(n)); }

Mask permute_mask(Mask bits, std::span<const std::size_t> perm) {
  Mask out = 0;
  for (Mask rest = bits; rest != 0; rest &= rest - 1) {
    out |= Mask{1} << perm[static_cast<std::size_t>(std::countr_zero(rest))];
  }
  return out;
}

Topology relabel(const Topology& space, std::span<const std::size_t> perm) {
  std::vector<Mask> opens;
  opens.reserve(space.open_count());
  for (Mask m : space.open_masks()) opens.push_back(permute_mask(m, perm));
  std::sort(opens.begin(), opens.end());
  return Topology::from_valid_opens(space.ground(), std::move(opens));
}

}  // namespace lctopo
