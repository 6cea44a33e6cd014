#include <doctest.h>

#include <map>
#include <set>

#include "lctopo/enumeration.hpp"
#include "lctopo/maps.hpp"
#include "support.hpp"

using namespace lctopo;
using namespace testing_support;

namespace {

std::vector<Mask> masks(const Topology& t) { return {t.open_masks().begin(), t.open_masks().end()}; }

std::uint64_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("labeled counts") {
  const std::vector<std::uint64_t> expected{1, 1, 4, 29, 355, 6942};
  for (std::size_t n = 0; n < expected.size(); ++n) {
    std::uint64_t streamed = 0;
    enumerate_labeled(n, [&](const Topology&) { ++streamed; });
    CHECK(streamed == expected[n]);
    CHECK(count_labeled(n, 1) == expected[n]);
    CHECK(count_labeled(n, 4) == expected[n]);
  }
}

TEST_CASE("enumeration yields exactly the oracle's topologies") {
  for (std::size_t n = 0; n <= 4; ++n) {
    std::set<std::vector<Mask>> seen;
    enumerate_labeled(n, [&](const Topology& t) {
      CHECK(t.ground() == GroundSet::standard(n));
      CHECK(seen.insert(masks(t)).second);
    });
    CHECK(seen == oracle::all_topologies(n));
  }
}

TEST_CASE("enumerated spaces validate") {
  enumerate_labeled(4, [](const Topology& t) {
    std::vector<PointSet> family;
    for (Mask m : t.open_masks()) family.emplace_back(m, 4);
    REQUIRE(validate_topology(t.ground(), family) == t);
  });
}

TEST_CASE("preorders arrive in lexicographic order and slices partition them") {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<std::vector<Mask>> order;
    for_each_preorder(n, [&](std::span<const Mask> rows) { order.emplace_back(rows.begin(), rows.end()); });
    CHECK(std::is_sorted(order.begin(), order.end()));
    CHECK(std::adjacent_find(order.begin(), order.end()) == order.end());

    std::size_t sliced = 0;
    for (Mask row : first_rows(n)) {
      CHECK((row & 1U) == 1U);
      for_each_preorder(n, row, [&](std::span<const Mask> rows) {
        CHECK(rows[0] == row);
        ++sliced;
      });
    }
    CHECK(sliced == order.size());
    CHECK(first_rows(n).size() == (std::size_t{1} << (n - 1)));
  }
}

TEST_CASE("size caps") {
  CHECK_THROWS_AS(count_labeled(8), TopologyError);
  CHECK_THROWS_AS(enumerate_classes(8), TopologyError);
  CHECK_THROWS_AS(labeled_spaces(5), TopologyError);
  CHECK(labeled_spaces(3).size() == 29);
}

TEST_CASE("class counts and the orbit identity") {
  const std::vector<std::size_t> expected{1, 1, 3, 9, 33};
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto classes = enumerate_classes(n, 1);
    REQUIRE(classes.size() == expected[n]);
    std::uint64_t orbits = 0;
    for (const Topology& c : classes) orbits += factorial(n) / automorphism_count(c);
    std::uint64_t labeled = 0;
    enumerate_labeled(n, [&](const Topology&) { ++labeled; });
    CHECK(orbits == labeled);
    CHECK(std::is_sorted(classes.begin(), classes.end(),
                         [](const Topology& a, const Topology& b) { return masks(a) < masks(b); }));
    CHECK(enumerate_classes(n, 4).size() == classes.size());
  }
}

TEST_CASE("class counts agree with grouping by homeomorphism") {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<Topology> representatives;
    for (const Topology& t : oracle_spaces(n)) {
      const bool known = std::any_of(representatives.begin(), representatives.end(),
                                     [&](const Topology& r) { return are_homeomorphic(r, t).has_value(); });
      if (!known) representatives.push_back(t);
    }
    CHECK(representatives.size() == enumerate_classes(n).size());
  }
}

TEST_CASE("canonical form is idempotent and label invariant") {
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto perms = permutations(n);
    for (const Topology& t : oracle_spaces(n)) {
      const CanonicalForm cf = canonical_form(t);
      REQUIRE(canonical_form(cf.space).space == cf.space);
      REQUIRE(relabel(t, cf.relabeling) == cf.space);
      for (const auto& perm : perms) {
        REQUIRE(canonical_form(relabel(t, perm)).space == cf.space);
      }
    }
  }
}

TEST_CASE("canonical forms of named spaces") {
  CHECK(masks(canonical_form(sierpinski()).space) == std::vector<Mask>{0, 1, 3});
  CHECK(masks(canonical_form(chain3()).space) == std::vector<Mask>{0, 1, 3, 7});
  CHECK(masks(canonical_form(space(3, {0, 4, 6, 7})).space) == std::vector<Mask>{0, 1, 3, 7});
  CHECK(masks(canonical_form(split3()).space) == std::vector<Mask>{0, 1, 6, 7});
  CHECK(automorphism_count(indiscrete_space(3)) == 6);
  CHECK(automorphism_count(chain3()) == 1);
  CHECK(automorphism_count(split3()) == 2);
}
