#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "lctopo/core.hpp"

namespace lctopo {

inline constexpr std::size_t kMaxEnumerationPoints = 7;

// Finite topologies on n labeled points are in bijection with preorders on
// them, so enumeration walks reflexive-transitive relations. Rows are chosen
// in order, each row ascending as a mask, and a prefix is dropped as soon as
// two chosen rows violate transitivity. The visit order is lexicographic on
// (row 0, row 1, ...).

// Candidate values of row 0. Each one names an independent slice of the
// enumeration, used to split work across threads.
std::vector<Mask> first_rows(std::size_t n);

void for_each_preorder(std::size_t n, const std::function<void(std::span<const Mask>)>& visit);
void for_each_preorder(std::size_t n, Mask first_row,
                       const std::function<void(std::span<const Mask>)>& visit);

// Every topology on the standard n-point ground set exactly once, streamed.
// Throws SizeCapExceeded above kMaxEnumerationPoints.
void enumerate_labeled(std::size_t n, const std::function<void(const Topology&)>& visit);
void enumerate_labeled(std::size_t n, Mask first_row, const std::function<void(const Topology&)>& visit);

std::uint64_t count_labeled(std::size_t n, unsigned jobs = 1);

// Materialized enumeration, only for n <= 4.
std::vector<Topology> labeled_spaces(std::size_t n);

struct CanonicalForm {
  Topology space;                      // on the standard ground set
  std::vector<std::size_t> relabeling;  // point i of the input is point relabeling[i]
};

// Lexicographically least sorted open family over all n! relabelings; the
// first permutation reaching it is reported. Homeomorphic spaces, and only
// those, share a canonical form.
CanonicalForm canonical_form(const Topology& space);

// One canonical representative per homeomorphism class, ascending by open
// family. Throws SizeCapExceeded above kMaxEnumerationPoints.
std::vector<Topology> enumerate_classes(std::size_t n, unsigned jobs = 1);

std::size_t automorphism_count(const Topology& space);

}  // namespace lctopo
