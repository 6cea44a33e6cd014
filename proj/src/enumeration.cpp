#include "lctopo/enumeration.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>
#include <set>
#include <string>

#include "parallel.hpp"

namespace lctopo {

namespace {

void check_enumeration_size(std::size_t n) {
  if (n > kMaxEnumerationPoints) {
    throw TopologyError(ErrorCode::kSizeCapExceeded,
                        "enumeration is limited to " + std::to_string(kMaxEnumerationPoints) + " points");
  }
}

// Row k may follow rows 0..k-1 iff transitivity holds between it and each of
// them in both directions.
bool consistent(std::span<const Mask> rows, std::size_t k, Mask row) {
  for (std::size_t i = 0; i < k; ++i) {
    if (((rows[i] >> k) & 1U) && (row & ~rows[i]) != 0) return false;
    if (((row >> i) & 1U) && (rows[i] & ~row) != 0) return false;
  }
  return true;
}

class PreorderWalker {
 public:
  PreorderWalker(std::size_t n, const std::function<void(std::span<const Mask>)>& visit)
      : n_(n), visit_(visit) {}

  void run_from(Mask first_row) {
    rows_[0] = first_row;
    descend(1);
  }

 private:
  void descend(std::size_t k) {
    if (k == n_) {
      visit_(std::span<const Mask>(rows_.data(), n_));
      return;
    }
    const Mask own = Mask{1} << k;
    const Mask limit = full_mask(n_);
    for (Mask row = own;; row = ((row | own) + 1) | own) {
      if (consistent(rows_, k, row)) {
        rows_[k] = row;
        descend(k + 1);
      }
      if (row == limit) break;
    }
  }

  std::size_t n_;
  const std::function<void(std::span<const Mask>)>& visit_;
  std::array<Mask, kMaxEnumerationPoints> rows_{};
};

// Ascending masks containing bit k: step through the other bits as a counter.
std::vector<Mask> rows_containing(std::size_t n, std::size_t k) {
  std::vector<Mask> out;
  const Mask own = Mask{1} << k;
  for (Mask row = own;; row = ((row | own) + 1) | own) {
    out.push_back(row);
    if (row == full_mask(n)) break;
  }
  return out;
}

std::vector<Mask> sorted_permuted(const Topology& space, std::span<const std::size_t> perm) {
  std::vector<Mask> opens;
  opens.reserve(space.open_count());
  for (Mask m : space.open_masks()) opens.push_back(permute_mask(m, perm));
  std::sort(opens.begin(), opens.end());
  return opens;
}

}  // namespace

std::vector<Mask> first_rows(std::size_t n) {
  check_enumeration_size(n);
  if (n == 0) return {};
  return rows_containing(n, 0);
}

void for_each_preorder(std::size_t n, Mask first_row,
                       const std::function<void(std::span<const Mask>)>& visit) {
  check_enumeration_size(n);
  if (n == 0 || (first_row & 1U) == 0 || (first_row & ~full_mask(n)) != 0) return;
  PreorderWalker(n, visit).run_from(first_row);
}

void for_each_preorder(std::size_t n, const std::function<void(std::span<const Mask>)>& visit) {
  check_enumeration_size(n);
  if (n == 0) {
    visit({});
    return;
  }
  for (Mask row : first_rows(n)) for_each_preorder(n, row, visit);
}

void enumerate_labeled(std::size_t n, Mask first_row, const std::function<void(const Topology&)>& visit) {
  const GroundSet ground = GroundSet::standard(n);
  for_each_preorder(n, first_row, [&](std::span<const Mask> rows) {
    visit(topology_from_neighborhoods(ground, rows));
  });
}

void enumerate_labeled(std::size_t n, const std::function<void(const Topology&)>& visit) {
  check_enumeration_size(n);
  if (n == 0) {
    visit(Topology());
    return;
  }
  for (Mask row : first_rows(n)) enumerate_labeled(n, row, visit);
}

std::uint64_t count_labeled(std::size_t n, unsigned jobs) {
  check_enumeration_size(n);
  if (n == 0) return 1;
  const auto rows = first_rows(n);
  std::vector<std::uint64_t> counts(rows.size(), 0);
  detail::run_partitioned(rows.size(), jobs, [&](std::size_t i) {
    std::uint64_t local = 0;
    for_each_preorder(n, rows[i], [&](std::span<const Mask>) { ++local; });
    counts[i] = local;
  });
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

std::vector<Topology> labeled_spaces(std::size_t n) {
  if (n > 4) {
    throw TopologyError(ErrorCode::kSizeCapExceeded, "materialized enumeration is limited to 4 points");
  }
  std::vector<Topology> out;
  enumerate_labeled(n, [&](const Topology& t) { out.push_back(t); });
  return out;
}

CanonicalForm canonical_form(const Topology& space) {
  const std::size_t n = space.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::size_t> best_perm = perm;
  std::vector<Mask> best(space.open_masks().begin(), space.open_masks().end());
  std::vector<Mask> candidate(space.open_count());
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::size_t k = 0;
    for (Mask m : space.open_masks()) candidate[k++] = permute_mask(m, perm);
    std::sort(candidate.begin(), candidate.end());
    if (candidate < best) {
      best.swap(candidate);
      best_perm = perm;
    }
  }
  return {Topology::from_valid_opens(GroundSet::standard(n), std::move(best)), std::move(best_perm)};
}

std::vector<Topology> enumerate_classes(std::size_t n, unsigned jobs) {
  check_enumeration_size(n);
  if (n == 0) return {Topology()};
  const auto rows = first_rows(n);
  std::set<std::vector<Mask>> keys;
  std::mutex keys_mutex;
  detail::run_partitioned(rows.size(), jobs, [&](std::size_t i) {
    std::set<std::vector<Mask>> local;
    enumerate_labeled(n, rows[i], [&](const Topology& t) {
      const CanonicalForm cf = canonical_form(t);
      const auto opens = cf.space.open_masks();
      local.emplace(opens.begin(), opens.end());
    });
    std::lock_guard lock(keys_mutex);
    keys.merge(local);
  });
  std::vector<Topology> out;
  out.reserve(keys.size());
  const GroundSet ground = GroundSet::standard(n);
  for (const auto& key : keys) out.push_back(Topology::from_valid_opens(ground, key));
  return out;
}

std::size_t automorphism_count(const Topology& space) {
  std::vector<std::size_t> perm(space.size());
  std::iota(perm.begin(), perm.end(), 0);
  const std::vector<Mask> own(space.open_masks().begin(), space.open_masks().end());
  std::size_t count = 0;
  do {
    if (sorted_permuted(space, perm) == own) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace lctopo
