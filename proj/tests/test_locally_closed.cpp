#include <doctest.h>

#include "lctopo/locally_closed.hpp"
#include "lctopo/properties.hpp"
#include "support.hpp"

using namespace lctopo;
using namespace testing_support;

TEST_CASE("locally closed sets of small spaces") {
  const Topology c3 = chain3();
  CHECK(is_locally_closed(c3, c3.set(0b010)));   // {b} = {a,b} ∩ {b,c}
  CHECK(is_locally_closed(c3, c3.set(0b001)));
  CHECK(is_locally_closed(c3, c3.set(0b100)));
  CHECK_FALSE(is_locally_closed(c3, c3.set(0b101)));

  const Topology two = indiscrete_space(2);
  CHECK_FALSE(is_locally_closed(two, two.set(0b01)));
  CHECK(is_locally_closed(two, two.whole()));
  CHECK(is_locally_closed(two, two.nothing()));
  CHECK_THROWS_AS(is_locally_closed(two, PointSet(0b100, 3)), TopologyError);
}

TEST_CASE("locally closed test agrees with the open-meets-closed definition") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const Topology& t : oracle_spaces(n)) {
      const auto opens = oracle::opens_of(t);
      for (Mask a = 0; a <= full_mask(n); ++a) {
        REQUIRE(is_locally_closed(t, t.set(a)) == oracle::locally_closed(opens, a));
      }
    }
  }
}

TEST_CASE("each criterion matches the definition on its own") {
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const Topology& t : oracle_spaces(n)) {
      const auto opens = oracle::opens_of(t);
      for (Mask a = 0; a <= full_mask(n); ++a) {
        for (auto c : lc_criteria::kAll) {
          INFO("criterion " << lc_criteria::name(c));
          REQUIRE(lc_criteria::holds(c, t, t.set(a)) == oracle::locally_closed(opens, a));
        }
      }
    }
  }
  CHECK(lc_criteria::name(lc_criteria::Criterion::kPointwise) == "a");
  CHECK(lc_criteria::name(lc_criteria::Criterion::kPaddedOpen) == "g");
}

TEST_CASE("decompositions list every open/closed pair") {
  for (const Topology& t : oracle_spaces(3)) {
    const auto opens = oracle::opens_of(t);
    for (Mask a = 0; a <= full_mask(3); ++a) {
      const auto pairs = lc_decompositions(t, t.set(a));
      std::size_t expected = 0;
      for (Mask g : opens) {
        for (Mask h : opens) {
          if ((g & ~h & full_mask(3)) == a) ++expected;
        }
      }
      REQUIRE(pairs.size() == expected);
      for (const auto& d : pairs) {
        CHECK(t.is_open(d.open_part));
        CHECK(t.is_closed(d.closed_part));
        CHECK((d.open_part & d.closed_part) == t.set(a));
      }
      CHECK(std::is_sorted(pairs.begin(), pairs.end(), [](const LcDecomposition& x, const LcDecomposition& y) {
        return std::pair(x.open_part, x.closed_part) < std::pair(y.open_part, y.closed_part);
      }));
    }
  }
}

TEST_CASE("locally closed family") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const Topology& t : oracle_spaces(n)) {
      std::vector<Mask> family;
      for (PointSet a : locally_closed_family(t)) family.push_back(a.bits());
      REQUIRE(family == oracle::lc_family(oracle::opens_of(t), n));
    }
  }
}

TEST_CASE("T_l is generated by the locally closed sets") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const Topology& t : oracle_spaces(n)) {
      const auto opens = oracle::opens_of(t);
      const Topology tl = tl_topology(t);
      REQUIRE(std::vector<Mask>(tl.open_masks().begin(), tl.open_masks().end()) ==
              oracle::close_family(oracle::lc_family(opens, n), n));
      // T is coarser than T_l.
      for (Mask u : opens) REQUIRE(tl.is_open(tl.set(u)));
    }
  }
}

TEST_CASE("T_l of the Sierpinski space is discrete") {
  CHECK(tl_topology(sierpinski()) == discrete_space(2));
  CHECK(tl_topology(indiscrete_space(3)) == indiscrete_space(3));
  CHECK(tl_topology(split3()) == split3());
}
