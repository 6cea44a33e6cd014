#include <doctest.h>

#include <functional>
#include <map>

#include "lctopo/locally_closed.hpp"
#include "lctopo/properties.hpp"
#include "support.hpp"

using namespace lctopo;
using namespace testing_support;

namespace {

using OracleFn = std::function<bool(const oracle::Family&, std::size_t)>;

const std::map<PropertyId, OracleFn>& oracles() {
  static const std::map<PropertyId, OracleFn> table = {
      {PropertyId::kT0, oracle::t0},
      {PropertyId::kT1, oracle::t1},
      {PropertyId::kTD, oracle::td},
      {PropertyId::kTHalf, oracle::thalf},
      {PropertyId::kSubmaximal, oracle::submaximal},
      {PropertyId::kDoor, oracle::door},
      {PropertyId::kPrincipal, [](const oracle::Family&, std::size_t) { return true; }},
      {PropertyId::kResolvable, oracle::resolvable},
      {PropertyId::kLocallyIndiscrete, oracle::locally_indiscrete},
      {PropertyId::kDiscrete, [](const oracle::Family& f, std::size_t n) { return f.size() == (1U << n); }},
      {PropertyId::kIndiscrete, [](const oracle::Family& f, std::size_t n) { return f.size() == (n == 0 ? 1U : 2U); }},
      {PropertyId::kConnected, oracle::connected},
      {PropertyId::kExtremallyDisconnected, oracle::extremally_disconnected},
      {PropertyId::kRegular, oracle::regular},
      {PropertyId::kCompletelyRegular, oracle::completely_regular},
      {PropertyId::kNormal, oracle::normal},
      {PropertyId::kLcRegular, oracle::lc_regular},
      {PropertyId::kLcCompletelyRegular, oracle::lc_completely_regular},
      {PropertyId::kLcNormal, oracle::lc_normal},
      {PropertyId::kLcCompact, [](const oracle::Family&, std::size_t) { return true; }},
  };
  return table;
}

bool has(const Topology& t, const char* token) { return check_property(t, parse_property(token)); }

}  // namespace

TEST_CASE("registry tokens") {
  const std::vector<std::string> expected{
      "t0", "t1", "td", "thalf", "submaximal", "door", "principal", "resolvable", "locally-indiscrete",
      "discrete", "indiscrete", "connected", "extremally-disconnected", "regular", "completely-regular",
      "normal", "lc-regular", "lc-completely-regular", "lc-normal", "lc-compact"};
  REQUIRE(property_registry().size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(property_registry()[i].token == expected[i]);
    CHECK(parse_property(expected[i]) == property_registry()[i].id);
    CHECK(property_token(property_registry()[i].id) == expected[i]);
    CHECK_FALSE(property_registry()[i].definition.empty());
  }
  try {
    parse_property("t2");
    FAIL("unknown token accepted");
  } catch (const TopologyError& e) {
    CHECK(e.code() == ErrorCode::kUnknownProperty);
  }
}

TEST_CASE("every property agrees with its definition on all spaces up to 4 points") {
  REQUIRE(oracles().size() == property_registry().size());
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const Topology& t : oracle_spaces(n)) {
      const auto opens = oracle::opens_of(t);
      for (const auto& [id, fn] : oracles()) {
        INFO("property " << property_token(id) << " n=" << n);
        REQUIRE(check_property(t, id) == fn(opens, n));
      }
    }
  }
}

TEST_CASE("empty space conventions") {
  const Topology empty;
  for (const auto& info : property_registry()) {
    const bool expected = info.id != PropertyId::kConnected && info.id != PropertyId::kResolvable;
    INFO(info.token);
    CHECK(check_property(empty, info.id) == expected);
  }
}

TEST_CASE("Sierpinski profile") {
  const Topology s = sierpinski();
  CHECK(has(s, "t0"));
  CHECK_FALSE(has(s, "t1"));
  CHECK(has(s, "td"));
  CHECK(has(s, "thalf"));
  CHECK(has(s, "submaximal"));
  CHECK(has(s, "door"));
  CHECK_FALSE(has(s, "locally-indiscrete"));
  CHECK(has(s, "extremally-disconnected"));
  CHECK_FALSE(has(s, "lc-normal"));
  CHECK_FALSE(has(s, "lc-regular"));
  CHECK(check_property(tl_topology(s), PropertyId::kDiscrete));
}

TEST_CASE("named small spaces") {
  CHECK(has(split3(), "locally-indiscrete"));
  CHECK_FALSE(has(split3(), "submaximal"));
  CHECK(has(chain3(), "td"));
  CHECK_FALSE(has(chain3(), "thalf"));
  CHECK(has(indiscrete_space(2), "resolvable"));
  CHECK(has(Topology(), "lc-compact"));
  CHECK(has(discrete_space(4), "lc-normal"));
}

TEST_CASE("isolated points and discrete subspaces") {
  CHECK(isolated_points(sierpinski()) == PointSet(0b01, 2));
  CHECK(isolated_points(discrete_space(3)) == PointSet::all(3));
  CHECK(isolated_points(indiscrete_space(3)).empty());

  CHECK(is_discrete_subspace(sierpinski(), PointSet(0b10, 2)));
  CHECK_FALSE(is_discrete_subspace(indiscrete_space(2), PointSet(0b11, 2)));
  // In the chain the only open set around c is X, so {a, c} carries the
  // Sierpinski topology; in the fork a and b have disjoint traces.
  CHECK_FALSE(is_discrete_subspace(chain3(), PointSet(0b101, 3)));
  CHECK(is_discrete_subspace(fork3(), PointSet(0b011, 3)));

  // Against the trace topology: every point of A is isolated in A.
  for (const Topology& t : oracle_spaces(3)) {
    for (Mask a = 0; a <= full_mask(3); ++a) {
      bool discrete = true;
      for (std::size_t x = 0; x < 3; ++x) {
        if (!((a >> x) & 1U)) continue;
        bool isolated = false;
        for (Mask u : t.open_masks()) isolated = isolated || (u & a) == oracle::singleton(x);
        discrete = discrete && isolated;
      }
      CHECK(is_discrete_subspace(t, t.set(a)) == discrete);
    }
  }
}

TEST_CASE("clopen separation") {
  CHECK(clopen_separated(discrete_space(3), 0, PointSet(0b110, 3)));
  CHECK_FALSE(clopen_separated(sierpinski(), 1, PointSet(0b01, 2)));
  CHECK(clopen_separated(split3(), 0, PointSet(0b110, 3)));
  for (const Topology& t : oracle_spaces(4)) {
    const auto opens = oracle::opens_of(t);
    for (Mask a = 0; a <= full_mask(4); ++a) {
      for (std::size_t x = 0; x < 4; ++x) {
        if ((a >> x) & 1U) continue;
        REQUIRE(clopen_separated(t, x, t.set(a)) == oracle::two_valued_separated(opens, 4, x, a));
      }
    }
  }
  CHECK_THROWS_AS(clopen_separated(sierpinski(), 5, PointSet(0, 2)), TopologyError);
}

TEST_CASE("finite spaces are compact") {
  for (const Topology& t : oracle_spaces(3)) CHECK(is_compact(t));
}
