#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "lctopo/core.hpp"
#include "lctopo/enumeration.hpp"
#include "oracles.hpp"

namespace testing_support {

using lctopo::Mask;
using lctopo::PointSet;
using lctopo::Topology;

inline Topology space(std::size_t n, std::initializer_list<Mask> opens) {
  std::vector<PointSet> family;
  for (Mask m : opens) family.emplace_back(m, n);
  return lctopo::validate_topology(lctopo::GroundSet::standard(n), family);
}

// {∅, {a}, X} on {a, b}.
inline Topology sierpinski() { return space(2, {0b00, 0b01, 0b11}); }
// {∅, {a}, {a,b}, X} on {a, b, c}.
inline Topology chain3() { return space(3, {0b000, 0b001, 0b011, 0b111}); }
// {∅, {a}, {b,c}, X}: locally indiscrete, not submaximal.
inline Topology split3() { return space(3, {0b000, 0b001, 0b110, 0b111}); }
// {∅, {c}, {a,c}, {b,c}, X}.
inline Topology fork3() { return space(3, {0b000, 0b100, 0b101, 0b110, 0b111}); }

// Every topology on n <= 4 points, built from the oracle's families.
inline std::vector<Topology> oracle_spaces(std::size_t n) {
  std::vector<Topology> out;
  for (const auto& family : oracle::all_topologies(n)) {
    out.push_back(Topology::from_valid_opens(lctopo::GroundSet::standard(n), family));
  }
  return out;
}

inline std::vector<Topology> oracle_spaces_up_to(std::size_t n) {
  std::vector<Topology> out;
  for (std::size_t k = 0; k <= n; ++k) {
    for (auto& t : oracle_spaces(k)) out.push_back(std::move(t));
  }
  return out;
}

inline std::vector<std::vector<std::size_t>> permutations(std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace testing_support
