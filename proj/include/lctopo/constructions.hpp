#pragma once

#include <span>

#include "lctopo/core.hpp"

namespace lctopo {

// Trace topology on `y`; points keep their labels and their order in `space`.
Topology subspace(const Topology& space, PointSet y);

// Cartesian product of at least one factor. Point labels are the factor
// labels joined with "×"; the last factor varies fastest. Throws
// SizeCapExceeded when the product has more than kMaxPoints points.
Topology product(std::span<const Topology> factors);

// Disjoint union. Labels are kept when they are globally distinct, otherwise
// every point is renamed "<summand index>:<label>".
Topology disjoint_sum(std::span<const Topology> summands);

// Index of a product point from its factor coordinates and back.
std::size_t product_index(std::span<const Topology> factors, std::span<const std::size_t> coords);
std::vector<std::size_t> product_coordinates(std::span<const Topology> factors, std::size_t index);

}  // namespace lctopo
