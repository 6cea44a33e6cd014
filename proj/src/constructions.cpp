#include "lctopo/constructions.hpp"

#include <algorithm>
#include <string>

namespace lctopo {

namespace {

// Packs the bits of `bits` selected by `select` into the low bits.
Mask compress(Mask bits, Mask select) {
  Mask out = 0;
  std::size_t k = 0;
  for (Mask rest = select; rest != 0; rest &= rest - 1, ++k) {
    if (bits & rest & ~(rest - 1)) out |= Mask{1} << k;
  }
  return out;
}

std::size_t checked_total(std::span<const Topology> spaces, bool multiply) {
  std::size_t total = multiply ? 1 : 0;
  for (const Topology& t : spaces) {
    total = multiply ? total * t.size() : total + t.size();
    if (total > kMaxPoints) {
      throw TopologyError(ErrorCode::kSizeCapExceeded,
                          "construction exceeds " + std::to_string(kMaxPoints) + " points");
    }
  }
  return total;
}

}  // namespace

Topology subspace(const Topology& space, PointSet y) {
  check_subset(space, y);
  std::vector<std::string> labels;
  for (std::size_t i : y.members()) labels.push_back(space.ground().label(i));
  std::vector<Mask> opens;
  opens.reserve(space.open_count());
  for (Mask g : space.open_masks()) opens.push_back(compress(g & y.bits(), y.bits()));
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  return Topology::from_valid_opens(GroundSet(std::move(labels)), std::move(opens));
}

std::size_t product_index(std::span<const Topology> factors, std::span<const std::size_t> coords) {
  std::size_t index = 0;
  for (std::size_t k = 0; k < factors.size(); ++k) index = index * factors[k].size() + coords[k];
  return index;
}

std::vector<std::size_t> product_coordinates(std::span<const Topology> factors, std::size_t index) {
  std::vector<std::size_t> coords(factors.size());
  for (std::size_t k = factors.size(); k > 0; --k) {
    coords[k - 1] = index % factors[k - 1].size();
    index /= factors[k - 1].size();
  }
  return coords;
}

Topology product(std::span<const Topology> factors) {
  if (factors.empty()) throw TopologyError(ErrorCode::kMalformedFile, "product of no factors");
  const std::size_t total = checked_total(factors, true);

  std::vector<std::string> labels(total);
  std::vector<Mask> nbhd(total);
  for (std::size_t p = 0; p < total; ++p) {
    const auto coords = product_coordinates(factors, p);
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k > 0) labels[p] += "×";
      labels[p] += factors[k].ground().label(coords[k]);
    }
    // Smallest box around p: the product of the factor neighborhoods.
    Mask box = 0;
    for (std::size_t q = 0; q < total; ++q) {
      const auto other = product_coordinates(factors, q);
      bool inside = true;
      for (std::size_t k = 0; k < factors.size() && inside; ++k) {
        inside = (factors[k].neighborhood(coords[k]) >> other[k]) & 1U;
      }
      if (inside) box |= Mask{1} << q;
    }
    nbhd[p] = box;
  }
  return topology_from_neighborhoods(GroundSet(std::move(labels)), nbhd);
}

Topology disjoint_sum(std::span<const Topology> summands) {
  const std::size_t total = checked_total(summands, false);
  std::vector<std::string> labels;
  labels.reserve(total);
  for (const Topology& t : summands) {
    for (const auto& label : t.ground().labels()) labels.push_back(label);
  }
  std::vector<std::string> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    labels.clear();
    for (std::size_t k = 0; k < summands.size(); ++k) {
      for (const auto& label : summands[k].ground().labels()) {
        labels.push_back(std::to_string(k) + ":" + label);
      }
    }
  }
  std::vector<Mask> nbhd;
  nbhd.reserve(total);
  std::size_t offset = 0;
  for (const Topology& t : summands) {
    for (std::size_t x = 0; x < t.size(); ++x) nbhd.push_back(t.neighborhood(x) << offset);
    offset += t.size();
  }
  return topology_from_neighborhoods(GroundSet(std::move(labels)), nbhd);
}

}  // namespace lctopo
