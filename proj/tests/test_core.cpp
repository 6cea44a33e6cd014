#include <doctest.h>

#include "lctopo/core.hpp"
#include "support.hpp"

using namespace lctopo;
using namespace testing_support;

namespace {

ErrorCode validation_error(std::size_t n, std::initializer_list<Mask> opens) {
  try {
    space(n, opens);
  } catch (const TopologyError& e) {
    return e.code();
  }
  FAIL("family was accepted");
  return ErrorCode::kMalformedFile;
}

}  // namespace

TEST_CASE("ground sets") {
  const GroundSet g = GroundSet::standard(3);
  CHECK(g.size() == 3);
  CHECK(g.label(0) == "a");
  CHECK(g.label(2) == "c");
  CHECK(g.index_of("b") == 1);
  CHECK_FALSE(g.index_of("z").has_value());
  CHECK_THROWS_AS(g.index_or_throw("z"), TopologyError);
  CHECK_THROWS_AS(GroundSet({"a", "a"}), TopologyError);
  CHECK(GroundSet::standard(3) == GroundSet({"a", "b", "c"}));

  std::vector<std::string> many;
  for (int i = 0; i < 17; ++i) many.push_back("p" + std::to_string(i));
  try {
    GroundSet big(many);
    FAIL("17 points accepted");
  } catch (const TopologyError& e) {
    CHECK(e.code() == ErrorCode::kSizeCapExceeded);
  }
}

TEST_CASE("point set algebra") {
  const PointSet a(0b011, 3);
  const PointSet b(0b110, 3);
  CHECK((a | b).bits() == 0b111);
  CHECK((a & b).bits() == 0b010);
  CHECK((a - b).bits() == 0b001);
  CHECK(a.complement().bits() == 0b100);
  CHECK(a.count() == 2);
  CHECK(a.contains(1));
  CHECK_FALSE(a.contains(2));
  CHECK(a.with(2) == PointSet::all(3));
  CHECK(a.without(0) == PointSet::singleton(1, 3));
  CHECK(a.members() == std::vector<std::size_t>{0, 1});
  CHECK(PointSet(0b001, 3).is_subset_of(a));
  CHECK(a.labels(GroundSet::standard(3)) == std::vector<std::string>{"a", "b"});
  const std::vector<std::string> labels{"c", "a"};
  CHECK(PointSet::from_labels(GroundSet::standard(3), labels).bits() == 0b101);
}

TEST_CASE("validation reports the first violated axiom") {
  CHECK(validation_error(2, {0b01, 0b11}) == ErrorCode::kMissingEmpty);
  CHECK(validation_error(2, {0b00, 0b01}) == ErrorCode::kMissingWhole);
  CHECK(validation_error(3, {0b001, 0b111}) == ErrorCode::kMissingEmpty);
  CHECK(validation_error(3, {0b000, 0b001, 0b010, 0b111}) == ErrorCode::kNotClosedUnderUnion);
  CHECK(validation_error(3, {0b000, 0b011, 0b110, 0b111}) == ErrorCode::kNotClosedUnderIntersection);

  try {
    space(3, {0b000, 0b001, 0b010, 0b111});
  } catch (const TopologyError& e) {
    CHECK(std::string(e.token()) == "NotClosedUnderUnion");
    CHECK(e.detail() == "{a},{b}");
  }

  std::vector<PointSet> foreign{PointSet(0, 2), PointSet(0b100, 3), PointSet(0b11, 2)};
  CHECK_THROWS_AS(validate_topology(GroundSet::standard(2), foreign), TopologyError);
}

TEST_CASE("the empty space is a topology") {
  const Topology empty = validate_topology(GroundSet::standard(0), std::vector<PointSet>{PointSet(0, 0)});
  CHECK(empty.size() == 0);
  CHECK(empty.open_count() == 1);
  CHECK(empty == Topology());
  CHECK(closure(empty, empty.nothing()).empty());
}

TEST_CASE("duplicates in the family are tolerated") {
  const Topology s = space(2, {0b11, 0b01, 0b00, 0b01});
  CHECK(s == sierpinski());
  CHECK(s.open_masks().size() == 3);
}

TEST_CASE("every oracle topology validates") {
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const auto& family : oracle::all_topologies(n)) {
      std::vector<PointSet> sets;
      for (Mask m : family) sets.emplace_back(m, n);
      const Topology t = validate_topology(GroundSet::standard(n), sets);
      CHECK(std::vector<Mask>(t.open_masks().begin(), t.open_masks().end()) == family);
    }
  }
}

TEST_CASE("closure, interior, boundary and derived set agree with the definitions") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const Topology& t : oracle_spaces(n)) {
      const auto opens = oracle::opens_of(t);
      for (Mask a = 0; a <= full_mask(n); ++a) {
        const Mask cl = oracle::closure(opens, n, a);
        const Mask in = oracle::interior(opens, a);
        REQUIRE(closure(t, t.set(a)).bits() == cl);
        REQUIRE(interior(t, t.set(a)).bits() == in);
        REQUIRE(boundary(t, t.set(a)).bits() == (cl & ~in));
        Mask derived = 0;
        for (std::size_t x = 0; x < n; ++x) {
          if ((oracle::closure(opens, n, a & ~oracle::singleton(x)) >> x) & 1U) derived |= oracle::singleton(x);
        }
        REQUIRE(derived_set(t, t.set(a)).bits() == derived);
        REQUIRE(t.is_open(t.set(a)) == oracle::is_open(opens, a));
        REQUIRE(t.is_closed(t.set(a)) == oracle::is_closed(opens, n, a));
      }
    }
  }
}

TEST_CASE("set classification") {
  for (const Topology& t : oracle_spaces(3)) {
    const auto opens = oracle::opens_of(t);
    for (Mask a = 0; a <= full_mask(3); ++a) {
      const SetClassification c = classify_set(t, t.set(a));
      const Mask cl = oracle::closure(opens, 3, a);
      CHECK(c.open == oracle::is_open(opens, a));
      CHECK(c.closed == oracle::is_closed(opens, 3, a));
      CHECK(c.clopen == (c.open && c.closed));
      CHECK(c.dense == (cl == full_mask(3)));
      CHECK(c.preopen == ((a & ~oracle::interior(opens, cl)) == 0));
      CHECK(c.regular_open == (a == oracle::interior(opens, cl)));
    }
  }
}

TEST_CASE("minimal neighborhoods are the intersections of all neighborhoods") {
  for (const Topology& t : oracle_spaces(4)) {
    for (std::size_t x = 0; x < 4; ++x) {
      Mask meet = full_mask(4);
      for (Mask u : t.open_masks()) {
        if ((u >> x) & 1U) meet &= u;
      }
      CHECK(minimal_neighborhood(t, x).bits() == meet);
    }
  }
  CHECK_THROWS_AS(minimal_neighborhood(sierpinski(), 2), TopologyError);
}

TEST_CASE("specialization preorder and its inverse") {
  const Preorder s = specialization_preorder(sierpinski());
  CHECK(s.leq(1, 0));
  CHECK_FALSE(s.leq(0, 1));

  for (std::size_t n = 0; n <= 4; ++n) {
    for (const Topology& t : oracle_spaces(n)) {
      const auto opens = oracle::opens_of(t);
      const Preorder order = specialization_preorder(t);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          REQUIRE(order.leq(x, y) == static_cast<bool>((oracle::closure(opens, n, oracle::singleton(y)) >> x) & 1U));
        }
      }
      REQUIRE(topology_from_preorder(order) == t);
    }
  }
}

TEST_CASE("preorder validation") {
  const GroundSet g = GroundSet::standard(3);
  try {
    Preorder(g, {0b001, 0b000, 0b100});
    FAIL("non-reflexive relation accepted");
  } catch (const TopologyError& e) {
    CHECK(e.code() == ErrorCode::kRelationNotReflexive);
  }
  try {
    Preorder(g, {0b011, 0b110, 0b100});
    FAIL("non-transitive relation accepted");
  } catch (const TopologyError& e) {
    CHECK(e.code() == ErrorCode::kRelationNotTransitive);
  }
  CHECK_THROWS_AS(Preorder(g, {0b001, 0b010}), TopologyError);
  CHECK_THROWS_AS(Preorder(g, {0b1001, 0b010, 0b100}), TopologyError);
}

TEST_CASE("topology generated by a subbase") {
  const std::size_t n = 3;
  const GroundSet g = GroundSet::standard(n);
  // Every family of subsets of a 3-point set.
  for (std::uint32_t pick = 0; pick < (1U << 8); ++pick) {
    std::vector<PointSet> family;
    std::vector<Mask> seed;
    for (Mask m = 0; m < 8; ++m) {
      if ((pick >> m) & 1U) {
        family.emplace_back(m, n);
        seed.push_back(m);
      }
    }
    const Topology t = generate_from_subbase(g, family);
    REQUIRE(std::vector<Mask>(t.open_masks().begin(), t.open_masks().end()) == oracle::close_family(seed, n));
  }
}

TEST_CASE("discrete and indiscrete spaces") {
  CHECK(discrete_space(3).open_count() == 8);
  CHECK(indiscrete_space(3).open_count() == 2);
  CHECK(indiscrete_space(0).open_count() == 1);
  CHECK(discrete_space(0) == indiscrete_space(0));
  CHECK(discrete_space(GroundSet({"x", "y"})).ground().label(1) == "y");
}

TEST_CASE("relabeling moves points and keeps labels") {
  const std::vector<std::size_t> swap{1, 0};
  CHECK(permute_mask(0b01, swap) == 0b10);
  const Topology moved = relabel(sierpinski(), swap);
  CHECK(moved.ground() == sierpinski().ground());
  CHECK(moved.is_open(moved.set(0b10)));
  CHECK_FALSE(moved.is_open(moved.set(0b01)));

  for (const Topology& t : oracle_spaces(3)) {
    for (const auto& perm : permutations(3)) {
      const Topology r = relabel(t, perm);
      CHECK(std::vector<Mask>(r.open_masks().begin(), r.open_masks().end()) ==
            oracle::permuted(oracle::opens_of(t), perm));
    }
  }
}
