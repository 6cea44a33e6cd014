#include "lctopo/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <numeric>
#include <tuple>

#include "lctopo/constructions.hpp"
#include "lctopo/enumeration.hpp"
#include "lctopo/locally_closed.hpp"
#include "lctopo/maps.hpp"
#include "parallel.hpp"

namespace lctopo {

namespace {

using Measures = std::map<std::string, std::uint64_t>;
using Clause = std::optional<std::string>;

struct Instance {
  const Topology* x = nullptr;
  const Topology* y = nullptr;
  PointSet a;
  PointSet b;
  std::span<const std::size_t> assignment;
};

using Check = Clause (*)(const Instance&, Measures&);
using MeasurePass = void (*)(std::size_t, Measures&);

bool has(const Topology& t, PropertyId p) { return check_property(t, p); }

std::string bits_text(std::initializer_list<std::pair<const char*, bool>> values) {
  std::string out;
  for (const auto& [name, value] : values) {
    if (!out.empty()) out += ' ';
    out += name;
    out += value ? "=1" : "=0";
  }
  return out;
}

template <typename Test>
bool all_subsets(const Topology& t, Test test) {
  const std::size_t subsets = std::size_t{1} << t.size();
  for (std::size_t u = 0; u < subsets; ++u) {
    if (!test(t.set(static_cast<Mask>(u)))) return false;
  }
  return true;
}

template <typename Test>
bool all_lc(const Topology& t, Test test) {
  for (const PointSet& a : locally_closed_family(t)) {
    if (!test(a)) return false;
  }
  return true;
}

bool same_opens(const Topology& a, const Topology& b) {
  return std::ranges::equal(a.open_masks(), b.open_masks());
}

// ---- propositions -------------------------------------------------------

Clause p01(const Instance& in, Measures&) {
  const Topology& x = *in.x;
  std::string values;
  const bool reference = lc_criteria::holds(lc_criteria::kAll[0], x, in.a);
  bool differ = false;
  for (auto criterion : lc_criteria::kAll) {
    const bool v = lc_criteria::holds(criterion, x, in.a);
    differ = differ || v != reference;
    values += std::string(lc_criteria::name(criterion)) + (v ? "=1 " : "=0 ");
  }
  const bool fast = is_locally_closed(x, in.a);
  differ = differ || fast != reference;
  if (differ) return "locally closed criteria disagree: " + values + "fast=" + (fast ? "1" : "0");
  return std::nullopt;
}

Clause p02(const Instance& in, Measures&) {
  const Topology& x = *in.x;
  if (closure(x, in.a) == x.whole() && is_locally_closed(x, in.a) && !x.is_open(in.a)) {
    return "dense locally closed set is not open";
  }
  return std::nullopt;
}

Clause p03(const Instance& in, Measures&) {
  const Topology& x = *in.x;
  if (is_locally_closed(x, in.a) && is_locally_closed(x, in.b) && !is_locally_closed(x, in.a & in.b)) {
    return "intersection of two locally closed sets is not locally closed";
  }
  return std::nullopt;
}

Clause p04(const Instance& in, Measures&) {
  const Topology& x = *in.x;
  const bool submaximal = has(x, PropertyId::kSubmaximal);
  const bool lc = is_locally_closed(x, in.a);
  if (submaximal && !lc) return "submaximal space has a subset that is not locally closed";
  // A dense non-open set refutes submaximality; it must not be locally closed.
  if (closure(x, in.a) == x.whole() && !x.is_open(in.a) && lc) {
    return "dense non-open set is locally closed";
  }
  if (in.a.empty()) {
    const bool every = all_subsets(x, [&](PointSet s) { return is_locally_closed(x, s); });
    if (every != submaximal) return "submaximal differs from every subset locally closed";
  }
  return std::nullopt;
}

Clause p05(const Instance& in, Measures&) {
  const Topology& x = *in.x;
  const bool indiscrete = has(x, PropertyId::kIndiscrete);
  const bool connected = has(tl_topology(x), PropertyId::kConnected);
  if (indiscrete != connected) {
    return "indiscrete differs from T_l connected: " +
           bits_text({{"indiscrete", indiscrete}, {"tl_connected", connected}});
  }
  return std::nullopt;
}

Clause p06(const Instance& in, Measures&) {
  const Topology& x = *in.x;
  const bool t0 = has(x, PropertyId::kT0);
  const bool tl_t0 = has(tl_topology(x), PropertyId::kT0);
  if (t0 != tl_t0) return "T0 differs from T_l T0: " + bits_text({{"t0", t0}, {"tl_t0", tl_t0}});
  return std::nullopt;
}

Clause p07(const Instance& in, Measures&) {
  const Topology& x = *in.x;
  const bool tl_discrete = has(tl_topology(x), PropertyId::kDiscrete);
  const bool td = has(x, PropertyId::kTD);
  if (td != tl_discrete) {
    return "TD differs from T_l discrete: " + bits_text({{"td", td}, {"tl_discrete", tl_discrete}});
  }
  if (has(x, PropertyId::kT1) && !tl_discrete) return "T1 space with non-discrete T_l";
  return std::nullopt;
}

Clause p08(const Instance& in, Measures&) {
  const Topology& x = *in.x;
  const bool td = has(x, PropertyId::kTD);
  const bool t0 = has(x, PropertyId::kT0);
  if (td && !t0) return "TD space is not T0";
  if (has(x, PropertyId::kPrincipal) && t0 && !td) return "principal T0 space is not TD";
  return std::nullopt;
}

Clause p09(const Instance& in, Measures&) {
  const Topology& x = *in.x;
  if (in.a.intersects(in.b) || !has(x, PropertyId::kSubmaximal)) return std::nullopt;
  if (!is_discrete_subspace(x, closure(x, in.a) & closure(x, in.b))) {
    return "cl(A) ∩ cl(B) is not discrete for disjoint A, B in a submaximal space";
  }
  return std::nullopt;
}

Clause p10(const Instance& in, Measures&) {
  const Topology& x = *in.x;
  if (has(x, PropertyId::kSubmaximal) && !is_discrete_subspace(x, boundary(x, in.a))) {
    return "boundary is not discrete in a submaximal space";
  }
  return std::nullopt;
}

Clause p11(const Instance& in, Measures&) {
  const Topology& x = *in.x;
  const auto preopen = [&](PointSet s) { return s.is_subset_of(interior(x, closure(x, s))); };
  const bool a = has(x, PropertyId::kLocallyIndiscrete);
  const bool b = all_subsets(x, preopen);
  bool c = true;
  for (std::size_t p = 0; p < x.size(); ++p) c = c && preopen(PointSet::singleton(p, x.size()));
  bool d = true;
  for (const PointSet& open : x.opens()) d = d && preopen(open.complement());
  const bool e = all_lc(x, [&](PointSet s) { return x.is_open(s); });
  const bool f = all_lc(x, [&](PointSet s) { return x.is_closed(s); });
  const bool g = all_lc(x, [&](PointSet s) { return x.is_open(closure(x, s)); });
  bool h = true;
  for (const PointSet& open : x.opens()) {
    if (closure(x, open) == x.whole()) h = h && open == interior(x, closure(x, open));
  }
  if (!(a == b && b == c && c == d && d == e && e == f && f == g && g == h)) {
    return "locally indiscrete characterizations disagree: " +
           bits_text({{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"e", e}, {"f", f}, {"g", g}, {"h", h}});
  }
  return std::nullopt;
}

Clause p12(const Instance& in, Measures&) {
  const Topology& x = *in.x;
  if (!has(x, PropertyId::kT1)) return std::nullopt;
  const bool discrete = has(x, PropertyId::kDiscrete);
  const bool li = has(x, PropertyId::kLocallyIndiscrete);
  bool regular = true;
  for (const PointSet& open : x.opens()) regular = regular && open == interior(x, closure(x, open));
  if (discrete != li || li != regular) {
    return "T1 characterizations of discreteness disagree: " +
           bits_text({{"discrete", discrete}, {"locally_indiscrete", li}, {"opens_regular_open", regular}});
  }
  return std::nullopt;
}

Clause p13(const Instance& in, Measures& measures) {
  const Topology& x = *in.x;
  const Topology tl = tl_topology(x);
  const bool li = has(x, PropertyId::kLocallyIndiscrete);
  const bool equal = same_opens(tl, x);
  const bool idempotent = same_opens(tl_topology(tl), tl);
  measures["tl_idempotent"] += idempotent ? 1 : 0;
  measures["tl_not_idempotent"] += idempotent ? 0 : 1;
  if (li != equal) {
    return "locally indiscrete differs from T = T_l: " + bits_text({{"locally_indiscrete", li}, {"equal", equal}});
  }
  return std::nullopt;
}

Clause p14(const Instance& in, Measures&) {
  const Topology& x = *in.x;
  if (!has(x, PropertyId::kLocallyIndiscrete)) return std::nullopt;
  const bool t1 = has(x, PropertyId::kT1);
  const bool thalf = has(x, PropertyId::kTHalf);
  const bool td = has(x, PropertyId::kTD);
  const bool t0 = has(x, PropertyId::kT0);
  const bool sub = has(x, PropertyId::kSubmaximal);
  const bool discrete = has(x, PropertyId::kDiscrete);
  if (!(t1 == thalf && thalf == td && td == t0 && t0 == sub && sub == discrete)) {
    return "locally indiscrete space separates the six conditions: " +
           bits_text({{"t1", t1}, {"thalf", thalf}, {"td", td}, {"t0", t0}, {"submaximal", sub},
                      {"discrete", discrete}});
  }
  return std::nullopt;
}

Clause p15(const Instance& in, Measures&) {
  const Topology& x = *in.x;
  if (has(x, PropertyId::kLocallyIndiscrete) && !has(x, PropertyId::kExtremallyDisconnected)) {
    return "locally indiscrete space is not extremally disconnected";
  }
  return std::nullopt;
}

Clause p16(const Instance& in, Measures&) {
  const Topology& x = *in.x;
  const std::array<std::pair<PropertyId, PropertyId>, 3> pairs = {{
      {PropertyId::kLcRegular, PropertyId::kRegular},
      {PropertyId::kLcCompletelyRegular, PropertyId::kCompletelyRegular},
      {PropertyId::kLcNormal, PropertyId::kNormal},
  }};
  const bool li = has(x, PropertyId::kLocallyIndiscrete);
  for (const auto& [lc, classic] : pairs) {
    const bool strong = has(x, lc);
    const bool weak = has(x, classic);
    if (strong && !weak) {
      return std::string(property_token(lc)) + " space is not " + std::string(property_token(classic));
    }
    if (li && weak && !strong) {
      return "locally indiscrete " + std::string(property_token(classic)) + " space is not " +
             std::string(property_token(lc));
    }
  }
  return std::nullopt;
}

Clause p17(const Instance& in, Measures&) {
  const Topology& x = *in.x;
  const bool lc_compact = has(x, PropertyId::kLcCompact);
  if (lc_compact != is_compact(tl_topology(x))) return "lc-compact differs from T_l compact";
  if (lc_compact && !is_compact(x)) return "lc-compact space is not compact";
  if (!lc_compact) return std::nullopt;
  for (const PointSet& open : x.opens()) {
    if (x.is_closed(open) && !has(subspace(x, open), PropertyId::kLcCompact)) {
      return "clopen subspace of an lc-compact space is not lc-compact";
    }
  }
  return std::nullopt;
}

FiniteMap map_of(const Instance& in) {
  return FiniteMap(*in.x, *in.y, std::vector<std::size_t>(in.assignment.begin(), in.assignment.end()));
}

Clause p18(const Instance& in, Measures&) {
  const MapClassification c = classify_map(map_of(in));
  if (c.continuous && !c.lc_continuous) return "continuous map is not lc-continuous";
  if (c.surjective && has(*in.x, PropertyId::kLcCompact)) {
    if (c.continuous && !has(*in.y, PropertyId::kLcCompact)) {
      return "continuous image of an lc-compact space is not lc-compact";
    }
    if (c.lc_continuous && !is_compact(*in.y)) return "lc-continuous image of an lc-compact space is not compact";
  }
  return std::nullopt;
}

Clause p19(const Instance& in, Measures&) {
  const FiniteMap f = map_of(in);
  if (!classify_map(f).continuous) return std::nullopt;
  for (const PointSet& b : locally_closed_family(*in.y)) {
    if (!is_locally_closed(*in.x, preimage(f, b))) return "preimage of a locally closed set under a continuous map is not locally closed";
  }
  return std::nullopt;
}

Clause p20(const Instance& in, Measures&) {
  const Topology& x = *in.x;
  const std::array<PropertyId, 5> chain = {PropertyId::kDoor, PropertyId::kSubmaximal, PropertyId::kTHalf,
                                           PropertyId::kTD, PropertyId::kT0};
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (has(x, chain[i]) && !has(x, chain[i + 1])) {
      return std::string(property_token(chain[i])) + " space is not " + std::string(property_token(chain[i + 1]));
    }
  }
  return std::nullopt;
}

Clause p21(const Instance& in, Measures&) {
  const Topology& x = *in.x;
  if (x.size() > 0 && has(x, PropertyId::kResolvable) && has(x, PropertyId::kSubmaximal)) {
    return "nonempty resolvable space is submaximal";
  }
  return std::nullopt;
}

Clause p22(const Instance& in, Measures&) {
  if (has(*in.x, PropertyId::kSubmaximal) && !has(subspace(*in.x, in.a), PropertyId::kSubmaximal)) {
    return "subspace of a submaximal space is not submaximal";
  }
  return std::nullopt;
}

Clause p23(const Instance& in, Measures&) {
  const std::array<Topology, 2> factors = {*in.x, *in.y};
  const Topology prod = product(factors);
  const bool factors_td = has(factors[0], PropertyId::kTD) && has(factors[1], PropertyId::kTD);
  const bool prod_td = has(prod, PropertyId::kTD);
  if (factors_td != prod_td) {
    return "TD of the product differs from TD of both factors: " +
           bits_text({{"factors_td", factors_td}, {"product_td", prod_td}});
  }
  for (Mask open : prod.open_masks()) {
    std::array<Mask, 2> shadow{};
    for (Mask rest = open; rest != 0; rest &= rest - 1) {
      const auto coords = product_coordinates(factors, static_cast<std::size_t>(std::countr_zero(rest)));
      shadow[0] |= Mask{1} << coords[0];
      shadow[1] |= Mask{1} << coords[1];
    }
    for (std::size_t k = 0; k < 2; ++k) {
      if (!factors[k].is_open(factors[k].set(shadow[k]))) return "projection of a product open is not open";
    }
  }
  if (in.y->size() == 1 && !are_homeomorphic(prod, *in.x)) {
    return "product with a one-point space is not homeomorphic to the factor";
  }
  return std::nullopt;
}

Clause p24(const Instance& in, Measures& measures) {
  const MapClassification c = classify_map(map_of(in));
  const FiniteMap refined(tl_topology(*in.x), *in.y,
                          std::vector<std::size_t>(in.assignment.begin(), in.assignment.end()));
  const bool tl_continuous = classify_map(refined).continuous;
  measures["tl_continuous_not_lc_continuous"] += tl_continuous && !c.lc_continuous ? 1 : 0;
  if (c.lc_continuous && !tl_continuous) return "lc-continuous map is not continuous from T_l";
  return std::nullopt;
}

// Continuous two-valued maps f: X -> {0, 1} (discrete) with f(x) = 0 and
// f = 1 on A, found by trying every assignment.
bool two_valued_separation(const Topology& x, std::size_t point, PointSet a) {
  const std::size_t subsets = std::size_t{1} << x.size();
  for (std::size_t u = 0; u < subsets; ++u) {
    const Mask zeros = static_cast<Mask>(u);
    const Mask ones = full_mask(x.size()) & ~zeros;
    if (((zeros >> point) & 1U) == 0 || (a.bits() & ~ones) != 0) continue;
    if (x.is_open(x.set(zeros)) && x.is_open(x.set(ones))) return true;
  }
  return false;
}

Clause p25(const Instance& in, Measures&) {
  const Topology& x = *in.x;
  if (is_locally_closed(x, in.a)) {
    for (std::size_t p = 0; p < x.size(); ++p) {
      if (in.a.contains(p)) continue;
      if (clopen_separated(x, p, in.a) != two_valued_separation(x, p, in.a)) {
        return "clopen separation differs from separation by a continuous two-valued map";
      }
    }
  }
  if (in.a.empty()) {
    const bool oracle = all_lc(x, [&](PointSet s) {
      for (std::size_t p = 0; p < x.size(); ++p) {
        if (!s.contains(p) && !two_valued_separation(x, p, s)) return false;
      }
      return true;
    });
    if (oracle != has(x, PropertyId::kLcCompletelyRegular)) {
      return "lc-completely-regular differs from its two-valued-map oracle";
    }
  }
  return std::nullopt;
}

std::vector<Topology> spaces_up_to(std::size_t n) {
  std::vector<Topology> pool;
  for (std::size_t k = 1; k <= n; ++k) {
    for (auto& t : labeled_spaces(k)) pool.push_back(std::move(t));
  }
  return pool;
}

// Composition of locally closed maps, recorded for spaces of at most 2 points.
void p18_compositions(std::size_t n, Measures& measures) {
  const auto pool = spaces_up_to(std::min<std::size_t>(n, 2));
  measures.try_emplace("lc_map_compositions", 0);
  measures.try_emplace("lc_map_composition_failures", 0);
  for (const Topology& x : pool) {
    for (const Topology& y : pool) {
      for (const Topology& z : pool) {
        for_each_assignment(x.size(), y.size(), [&](std::span<const std::size_t> f) {
          const std::vector<std::size_t> fv(f.begin(), f.end());
          if (!classify_map(FiniteMap(x, y, fv)).locally_closed_map) return;
          for_each_assignment(y.size(), z.size(), [&](std::span<const std::size_t> g) {
            const std::vector<std::size_t> gv(g.begin(), g.end());
            if (!classify_map(FiniteMap(y, z, gv)).locally_closed_map) return;
            std::vector<std::size_t> gf(fv.size());
            for (std::size_t i = 0; i < fv.size(); ++i) gf[i] = gv[fv[i]];
            ++measures["lc_map_compositions"];
            if (!classify_map(FiniteMap(x, z, gf)).locally_closed_map) ++measures["lc_map_composition_failures"];
          });
        });
      }
    }
  }
}

struct Proposition {
  PropositionInfo info;
  Check check;
  MeasurePass pass = nullptr;
};

const std::array<Proposition, 25> kPropositions = {{
    {{"P01", Domain::kSpaceSubset, "the seven characterizations of a locally closed set agree",
      "e) cl(A)-A is a closed set"}, p01},
    {{"P02", Domain::kSpaceSubset, "a dense locally closed set is open",
      "Every dense locally closed set is open"}, p02},
    {{"P03", Domain::kSpaceSubsetPair, "the intersection of two locally closed sets is locally closed",
      "intersection of finite number locally closed sets"}, p03},
    {{"P04", Domain::kSpaceSubset, "submaximal iff every subset is locally closed",
      "every subset of X is locally closed"}, p04},
    {{"P05", Domain::kSpaces, "indiscrete iff T_l is connected",
      "if and only if (X,T_l) is a connected space"}, p05},
    {{"P06", Domain::kSpaces, "T0 iff T_l is T0", "T0-space if and only if (X,T_l) is a T0-space"}, p06},
    {{"P07", Domain::kSpaces, "TD iff T_l is discrete; T1 implies T_l discrete",
      "if and only if (X,T_l) is discrete"}, p07},
    {{"P08", Domain::kSpaces, "TD implies T0; principal T0 implies TD",
      "Every principal T0-space is T_D"}, p08},
    {{"P09", Domain::kSpaceSubsetPair, "in a submaximal space cl(A) ∩ cl(B) is discrete for disjoint A, B",
      "cl(A)∩cl(B) is discrete"}, p09},
    {{"P10", Domain::kSpaceSubset, "in a submaximal space every boundary is discrete",
      "Fr(A) is a discrete subset"}, p10},
    {{"P11", Domain::kSpaces, "the eight characterizations of locally indiscrete spaces agree",
      "Every dense open subset of X is regular open"}, p11},
    {{"P12", Domain::kSpaces, "for T1 spaces: discrete iff locally indiscrete iff every open is regular open",
      "Every open set is regular open"}, p12},
    {{"P13", Domain::kSpaces, "locally indiscrete iff T = T_l", "if and only if T=T_l"}, p13},
    {{"P14", Domain::kSpaces, "for locally indiscrete spaces: T1, T1/2, TD, T0, submaximal, discrete agree",
      "X is a discrete space"}, p14},
    {{"P15", Domain::kSpaces, "locally indiscrete implies extremally disconnected", "extremally disconnected"},
     p15},
    {{"P16", Domain::kSpaces,
      "lc-separation implies separation; the converses hold for locally indiscrete spaces",
      "The converse is hold in locally indiscrete spaces"}, p16},
    {{"P17", Domain::kSpaces, "clopen subspaces of lc-compact spaces are lc-compact; lc-compact iff T_l compact",
      "Every clopen subset of a lc-compact space is lc-compact"}, p17},
    {{"P18", Domain::kSpacePairMap, "continuous maps are lc-continuous",
      "Every continuous function is lc-continuous"}, p18, p18_compositions},
    {{"P19", Domain::kSpacePairMap, "continuous preimages of locally closed sets are locally closed",
      "f^{-1}(B)⊆X is locally closed"}, p19},
    {{"P20", Domain::kSpaces, "door ⇒ submaximal ⇒ T1/2 ⇒ TD ⇒ T0",
      "A door space is submaximal and a submaximal space is T½"}, p20},
    {{"P21", Domain::kSpaces, "a nonempty resolvable space is not submaximal",
      "A nonempty resolvable space never submaximal"}, p21},
    {{"P22", Domain::kSpaceSubset, "subspaces of submaximal spaces are submaximal",
      "every subspace of a submaximal space is submaximal"}, p22},
    {{"P23", Domain::kSpacePair, "a finite product is TD iff its factors are TD",
      "The converse is true if I is finite"}, p23},
    {{"P24", Domain::kSpacePairMap, "lc-continuous maps are continuous from T_l",
      "then f:(X,T_l)→Y is continuous"}, p24},
    {{"P25", Domain::kSpaceSubset,
      "clopen separation agrees with separation by continuous two-valued maps",
      "f(x)=0 and f(A)=1"}, p25},
}};

const Proposition& lookup(std::string_view id) {
  for (const auto& p : kPropositions) {
    if (p.info.id == id) return p;
  }
  throw TopologyError(ErrorCode::kUnknownProposition, std::string(id));
}

// ---- witnesses ----------------------------------------------------------

Witness canonicalize(Witness w) {
  std::vector<std::vector<std::size_t>> perms;
  for (Topology& space : w.spaces) {
    CanonicalForm cf = canonical_form(space);
    space = std::move(cf.space);
    perms.push_back(std::move(cf.relabeling));
  }
  for (NamedSet& s : w.sets) {
    s.set = PointSet(permute_mask(s.set.bits(), perms[s.space]), s.set.universe());
  }
  for (NamedPoint& p : w.points) p.point = perms[p.space][p.point];
  if (!w.assignment.empty() && perms.size() >= 2) {
    std::vector<std::size_t> moved(w.assignment.size());
    for (std::size_t i = 0; i < w.assignment.size(); ++i) moved[perms[0][i]] = perms[1][w.assignment[i]];
    w.assignment = std::move(moved);
  }
  return w;
}

Witness instance_witness(const PropositionInfo& info, const Instance& in, std::string clause) {
  Witness w;
  w.subject = std::string(info.id);
  w.spaces.push_back(*in.x);
  if (in.y != nullptr) w.spaces.push_back(*in.y);
  if (info.domain == Domain::kSpaceSubset || info.domain == Domain::kSpaceSubsetPair) {
    w.sets.push_back({"A", 0, in.a});
  }
  if (info.domain == Domain::kSpaceSubsetPair) w.sets.push_back({"B", 0, in.b});
  w.assignment.assign(in.assignment.begin(), in.assignment.end());
  w.clause = std::move(clause);
  return w;
}

auto witness_key(const Witness& w) {
  std::vector<std::vector<Mask>> spaces;
  for (const auto& s : w.spaces) spaces.emplace_back(s.open_masks().begin(), s.open_masks().end());
  std::vector<Mask> sets;
  for (const auto& s : w.sets) sets.push_back(s.set.bits());
  std::vector<std::size_t> points;
  for (const auto& p : w.points) points.push_back(p.point);
  return std::make_tuple(spaces, sets, points, w.assignment, w.clause);
}

const PointSet* find_set(const Witness& w, std::string_view name) {
  for (const auto& s : w.sets) {
    if (s.name == name) return &s.set;
  }
  return nullptr;
}

struct Partial {
  std::uint64_t checked = 0;
  std::vector<Witness> found;
  Measures measures;
};

void check_instance(const Proposition& prop, const Instance& in, Partial& partial) {
  ++partial.checked;
  if (auto clause = prop.check(in, partial.measures)) {
    partial.found.push_back(instance_witness(prop.info, in, std::move(*clause)));
  }
}

void visit_space(const Proposition& prop, const Topology& t, Partial& partial) {
  const std::size_t subsets = std::size_t{1} << t.size();
  switch (prop.info.domain) {
    case Domain::kSpaces:
      check_instance(prop, Instance{&t, nullptr, t.nothing(), t.nothing(), {}}, partial);
      break;
    case Domain::kSpaceSubset:
      for (std::size_t u = 0; u < subsets; ++u) {
        check_instance(prop, Instance{&t, nullptr, t.set(static_cast<Mask>(u)), t.nothing(), {}}, partial);
      }
      break;
    case Domain::kSpaceSubsetPair:
      for (std::size_t u = 0; u < subsets; ++u) {
        for (std::size_t v = 0; v < subsets; ++v) {
          check_instance(prop, Instance{&t, nullptr, t.set(static_cast<Mask>(u)), t.set(static_cast<Mask>(v)), {}},
                         partial);
        }
      }
      break;
    default:
      break;
  }
}

// ---- phenomena ----------------------------------------------------------

bool lc(const Topology& t, Mask m) { return is_locally_closed(t, t.set(m)); }

std::optional<Witness> find_phenomenon(Phenomenon kind, const Topology& t) {
  const std::size_t subsets = std::size_t{1} << t.size();
  Witness w;
  w.subject = std::string(phenomenon_token(kind));
  w.spaces.push_back(t);
  for (std::size_t ua = 0; ua < subsets; ++ua) {
    const auto a = static_cast<Mask>(ua);
    if (!lc(t, a)) continue;
    switch (kind) {
      case Phenomenon::kUnionOfLcNotLc:
        for (std::size_t ub = 0; ub < subsets; ++ub) {
          const auto b = static_cast<Mask>(ub);
          if (lc(t, b) && !lc(t, a | b)) {
            w.sets = {{"A", 0, t.set(a)}, {"B", 0, t.set(b)}};
            w.clause = "A and B are locally closed but A ∪ B is not";
            w.values = {{"lc(A)", true}, {"lc(B)", true}, {"lc(A∪B)", false}};
            return w;
          }
        }
        break;
      case Phenomenon::kAddClusterPointNotLc: {
        const Mask gap = closure(t, t.set(a)).bits() & ~a;
        for (std::size_t x = 0; x < t.size(); ++x) {
          if (((gap >> x) & 1U) && !lc(t, a | (Mask{1} << x))) {
            w.sets = {{"A", 0, t.set(a)}};
            w.points = {{"x", 0, x}};
            w.clause = "A is locally closed, x ∈ cl(A) ∖ A, and A ∪ {x} is not locally closed";
            w.values = {{"lc(A)", true}, {"x∈cl(A)∖A", true}, {"lc(A∪{x})", false}};
            return w;
          }
        }
        break;
      }
      case Phenomenon::kComplementOfLcNotLc:
        if (!lc(t, full_mask(t.size()) & ~a)) {
          w.sets = {{"A", 0, t.set(a)}};
          w.clause = "A is locally closed but X ∖ A is not";
          w.values = {{"lc(A)", true}, {"lc(X∖A)", false}};
          return w;
        }
        break;
      case Phenomenon::kClosureProductInequality:
        for (std::size_t ub = 0; ub < subsets; ++ub) {
          const auto b = static_cast<Mask>(ub);
          if (!lc(t, b)) continue;
          const PointSet left = closure(t, t.set(a & b));
          const PointSet right = closure(t, t.set(a)) & closure(t, t.set(b));
          if (left != right) {
            w.sets = {{"A", 0, t.set(a)}, {"B", 0, t.set(b)}};
            w.clause = "A and B are locally closed but cl(A ∩ B) ≠ cl(A) ∩ cl(B)";
            w.values = {{"lc(A)", true}, {"lc(B)", true}, {"cl(A∩B)=cl(A)∩cl(B)", false}};
            return w;
          }
        }
        break;
    }
  }
  return std::nullopt;
}

bool replay_phenomenon(Phenomenon kind, const Witness& w) {
  if (w.spaces.empty()) return false;
  const Topology& t = w.spaces[0];
  const PointSet* a = find_set(w, "A");
  const PointSet* b = find_set(w, "B");
  if (a == nullptr) return false;
  switch (kind) {
    case Phenomenon::kUnionOfLcNotLc:
      return b != nullptr && is_locally_closed(t, *a) && is_locally_closed(t, *b) &&
             !is_locally_closed(t, *a | *b);
    case Phenomenon::kAddClusterPointNotLc: {
      if (w.points.empty()) return false;
      const std::size_t x = w.points[0].point;
      return is_locally_closed(t, *a) && (closure(t, *a) - *a).contains(x) && !is_locally_closed(t, a->with(x));
    }
    case Phenomenon::kComplementOfLcNotLc:
      return is_locally_closed(t, *a) && !is_locally_closed(t, a->complement());
    case Phenomenon::kClosureProductInequality:
      return b != nullptr && is_locally_closed(t, *a) && is_locally_closed(t, *b) &&
             closure(t, *a & *b) != (closure(t, *a) & closure(t, *b));
  }
  return false;
}

void check_search_size(std::size_t n_max) {
  if (n_max > kMaxEnumerationPoints) {
    throw TopologyError(ErrorCode::kSizeCapExceeded,
                        "search is limited to " + std::to_string(kMaxEnumerationPoints) + " points");
  }
}

}  // namespace

std::string_view domain_name(Domain domain) {
  switch (domain) {
    case Domain::kSpaces: return "spaces";
    case Domain::kSpaceSubset: return "space+subset";
    case Domain::kSpaceSubsetPair: return "space+subset-pair";
    case Domain::kSpacePair: return "space-pair";
    case Domain::kSpacePairMap: return "space-pair+map";
  }
  return "?";
}

std::size_t domain_cap(Domain domain) {
  switch (domain) {
    case Domain::kSpaces: return 5;
    case Domain::kSpaceSubset:
    case Domain::kSpaceSubsetPair: return 4;
    case Domain::kSpacePair:
    case Domain::kSpacePairMap: return 3;
  }
  return 0;
}

std::span<const PropositionInfo> list_propositions() {
  static const std::vector<PropositionInfo> infos = [] {
    std::vector<PropositionInfo> out;
    for (const auto& p : kPropositions) out.push_back(p.info);
    return out;
  }();
  return infos;
}

const PropositionInfo& find_proposition(std::string_view id) { return lookup(id).info; }

VerificationReport verify_proposition(std::string_view id, std::size_t n, unsigned jobs) {
  const Proposition& prop = lookup(id);
  const std::size_t cap = domain_cap(prop.info.domain);
  if (n < 1 || n > cap) {
    throw TopologyError(ErrorCode::kSizeCapExceeded, std::string(id) + " runs for 1 <= n <= " + std::to_string(cap));
  }
  const auto start = std::chrono::steady_clock::now();
  std::vector<Partial> partials;

  if (prop.info.domain == Domain::kSpacePair || prop.info.domain == Domain::kSpacePairMap) {
    const auto pool = spaces_up_to(n);
    partials.resize(pool.size());
    detail::run_partitioned(pool.size(), jobs, [&](std::size_t i) {
      for (const Topology& y : pool) {
        if (prop.info.domain == Domain::kSpacePair) {
          check_instance(prop, Instance{&pool[i], &y, pool[i].nothing(), pool[i].nothing(), {}}, partials[i]);
          continue;
        }
        for_each_assignment(pool[i].size(), y.size(), [&](std::span<const std::size_t> f) {
          check_instance(prop, Instance{&pool[i], &y, pool[i].nothing(), pool[i].nothing(), f}, partials[i]);
        });
      }
    });
  } else {
    const auto rows = first_rows(n);
    partials.resize(rows.size());
    detail::run_partitioned(rows.size(), jobs, [&](std::size_t i) {
      enumerate_labeled(n, rows[i], [&](const Topology& t) { visit_space(prop, t, partials[i]); });
    });
  }

  VerificationReport report;
  report.prop = std::string(prop.info.id);
  report.n = n;
  for (Partial& p : partials) {
    report.checked += p.checked;
    for (auto& w : p.found) report.counterexamples.push_back(canonicalize(std::move(w)));
    for (const auto& [name, count] : p.measures) report.measures[name] += count;
  }
  if (prop.pass != nullptr) prop.pass(n, report.measures);
  std::stable_sort(report.counterexamples.begin(), report.counterexamples.end(),
                   [](const Witness& a, const Witness& b) { return witness_key(a) < witness_key(b); });
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<VerificationReport> verify_all(std::size_t n, unsigned jobs) {
  if (n < 1) throw TopologyError(ErrorCode::kSizeCapExceeded, "verification needs n >= 1");
  std::vector<VerificationReport> reports;
  for (const auto& p : kPropositions) {
    reports.push_back(verify_proposition(p.info.id, std::min(n, domain_cap(p.info.domain)), jobs));
  }
  return reports;
}

SearchResult search(std::span<const PropertyId> require, std::span<const PropertyId> forbid,
                    std::size_t n_max, unsigned jobs, std::size_t n_min) {
  check_search_size(n_max);
  const auto matches = [&](const Topology& t) {
    for (PropertyId p : require) {
      if (!check_property(t, p)) return false;
    }
    for (PropertyId p : forbid) {
      if (check_property(t, p)) return false;
    }
    return true;
  };

  SearchResult result;
  for (std::size_t n = std::max<std::size_t>(n_min, 1); n <= n_max; ++n) {
    const auto rows = first_rows(n);
    std::vector<std::uint64_t> visited(rows.size(), 0);
    std::vector<std::optional<std::vector<Mask>>> best(rows.size());
    detail::run_partitioned(rows.size(), jobs, [&](std::size_t i) {
      enumerate_labeled(n, rows[i], [&](const Topology& t) {
        ++visited[i];
        if (!matches(t)) return;
        const CanonicalForm cf = canonical_form(t);
        const auto opens = cf.space.open_masks();
        std::vector<Mask> key(opens.begin(), opens.end());
        if (!best[i] || key < *best[i]) best[i] = std::move(key);
      });
    });
    result.visited += std::accumulate(visited.begin(), visited.end(), std::uint64_t{0});
    result.n_reached = n;

    std::optional<std::vector<Mask>> least;
    for (auto& b : best) {
      if (b && (!least || *b < *least)) least = std::move(b);
    }
    if (least) {
      Witness w;
      w.subject = "search";
      w.spaces.push_back(Topology::from_valid_opens(GroundSet::standard(n), std::move(*least)));
      std::string clause;
      for (PropertyId p : require) {
        w.values.push_back({std::string(property_token(p)), true});
        clause += (clause.empty() ? "" : " ∧ ") + std::string(property_token(p));
      }
      for (PropertyId p : forbid) {
        w.values.push_back({std::string(property_token(p)), false});
        clause += (clause.empty() ? "¬" : " ∧ ¬") + std::string(property_token(p));
      }
      w.clause = clause;
      result.witness = std::move(w);
      return result;
    }
  }
  return result;
}

std::string_view phenomenon_token(Phenomenon kind) {
  switch (kind) {
    case Phenomenon::kUnionOfLcNotLc: return "union-of-lc-not-lc";
    case Phenomenon::kAddClusterPointNotLc: return "add-cluster-point-not-lc";
    case Phenomenon::kComplementOfLcNotLc: return "complement-of-lc-not-lc";
    case Phenomenon::kClosureProductInequality: return "closure-product-inequality";
  }
  return "?";
}

Phenomenon parse_phenomenon(std::string_view token) {
  for (auto kind : {Phenomenon::kUnionOfLcNotLc, Phenomenon::kAddClusterPointNotLc,
                    Phenomenon::kComplementOfLcNotLc, Phenomenon::kClosureProductInequality}) {
    if (phenomenon_token(kind) == token) return kind;
  }
  throw TopologyError(ErrorCode::kUnknownKind, std::string(token));
}

SearchResult search_set_phenomena(Phenomenon kind, std::size_t n_max) {
  check_search_size(n_max);
  SearchResult result;
  for (std::size_t n = 1; n <= n_max; ++n) {
    result.n_reached = n;
    for (const Topology& t : enumerate_classes(n)) {
      ++result.visited;
      if (auto w = find_phenomenon(kind, t)) {
        result.witness = std::move(w);
        return result;
      }
    }
  }
  return result;
}

bool replay(const Witness& w) {
  if (w.subject == "search") {
    if (w.spaces.size() != 1) return false;
    for (const auto& v : w.values) {
      if (check_property(w.spaces[0], parse_property(v.name)) != v.value) return false;
    }
    return true;
  }
  if (!w.subject.empty() && w.subject[0] == 'P') {
    const Proposition& prop = lookup(w.subject);
    if (w.spaces.empty()) return false;
    Instance in;
    in.x = &w.spaces[0];
    in.y = w.spaces.size() > 1 ? &w.spaces[1] : nullptr;
    const PointSet* a = find_set(w, "A");
    const PointSet* b = find_set(w, "B");
    in.a = a != nullptr ? *a : w.spaces[0].nothing();
    in.b = b != nullptr ? *b : w.spaces[0].nothing();
    in.assignment = w.assignment;
    Measures scratch;
    const Clause clause = prop.check(in, scratch);
    return clause.has_value() && *clause == w.clause;
  }
  return replay_phenomenon(parse_phenomenon(w.subject), w);
}

}  // namespace lctopo
