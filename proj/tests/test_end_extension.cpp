#include <random>

#include "doctest.h"
#include "pretop/end_extension.hpp"
#include "pretop/errors.hpp"
#include "pretop/set_literal.hpp"

using namespace pretop;
using namespace pretop::sym;

namespace {

Point rp(std::size_t ray, Coord n) { return Point{StrandRef{StrandKind::ray, ray}, n, 0}; }
Point atom(std::size_t i) { return Point{StrandRef{StrandKind::atom, i}, 0, 0}; }

// Direct vicinity definition on sampled points: for every k' some k ≤ 40
// has V(x, k) ⊆ f⁻[W(f(x), k')].
bool sampled_continuous(const SymMap& f, Coord radius) {
  const SymbolicPretop& x = f.source();
  const GroundSchema& g = *x.schema();
  std::vector<Point> pts;
  for (StrandRef s : g.strands()) {
    if (g.arity(s) == 0) {
      if (x.carrier().contains(Point{s, 0, 0})) pts.push_back({s, 0, 0});
      continue;
    }
    for (Coord n = 0; n <= radius; ++n) {
      if (x.carrier().contains(Point{s, n, 0})) pts.push_back({s, n, 0});
    }
  }
  for (const Point& p : pts) {
    const Point y = f.apply(p);
    for (Coord kt = 0; kt <= 4; ++kt) {
      const DefSet back = f.preimage(f.target().vicinity(y, kt));
      bool found = false;
      for (Coord k = 0; k <= 40 && !found; ++k) found = back.includes(x.vicinity(p, k));
      if (!found) return false;
    }
  }
  return true;
}

struct Spaces {
  EndExtension e1 = end_extension(discrete_ray(1));
  EndExtension e2 = end_extension(discrete_ray(2));
  EndExtension o2 = one_point_compactification(discrete_ray(2));
};

}  // namespace

TEST_CASE("end_extension examples") {
  Spaces s;
  REQUIRE(s.e1.added.size() == 1);
  CHECK(s.e1.added[0].name == "w_R0");
  CHECK(s.e1.compact);
  CHECK(s.e1.hausdorff.hausdorff);
  const Point w = atom(0);
  CHECK(s.e1.space.vicinity(w, 3) == parse_set_literal("atom(w_R0) | ray(R0; 3..)", s.e1.space.schema()));
  CHECK(s.e1.space.vicinity(rp(0, 5), 2) == parse_set_literal("ray(R0; 5)", s.e1.space.schema()));
  CHECK_FALSE(sym_is_compact(discrete_ray(1)).compact);

  CHECK(s.e2.added.size() == 2);
  CHECK(s.e2.compact);
  CHECK(s.e2.added_for(TraceClass{StrandRef{StrandKind::ray, 1}, {1, 0}}) == atom(1));

  REQUIRE(s.o2.added.size() == 1);
  CHECK(s.o2.added[0].members.size() == 2);
  CHECK(s.o2.compact);
  CHECK(s.o2.space.vicinity(atom(0), 2) ==
        parse_set_literal("atom(w) | ray(R0; 2..) | ray(R1; 2..)", s.o2.space.schema()));

  const SymbolicPretop ru = sym_regularize(urysohn());
  auto r = end_extension(ru);
  CHECK(r.added.empty());
  CHECK(r.compact);
  CHECK_FALSE(r.hausdorff.hausdorff);

  // Only column 0 escapes to infinity along the rows.
  for (const auto& x : {urysohn(), half_grid()}) {
    auto e = end_extension(x);
    REQUIRE(e.added.size() == 1);
    CHECK(e.added[0].name == "w_G_p_0");
    CHECK(e.compact);
    CHECK(e.embed(x.carrier()).unite(DefSet::atom(e.space.schema(), x.schema()->atoms().size())) ==
          e.space.carrier());
  }
  CHECK(end_extension(from_finite(FinitePretop::discrete(2))).added.empty());
}

TEST_CASE("symbolic maps") {
  const SymbolicPretop x = discrete_ray(1), x2 = discrete_ray(2);
  auto shift = SymMap::make(x, x, {StrandMap::affine("R0", "R0", {1, 1}, {1, 0})});
  CHECK(shift.apply(rp(0, 4)) == rp(0, 5));
  CHECK(shift.preimage(parse_set_literal("ray(R0; 0..3)", x.schema())) ==
        parse_set_literal("ray(R0; 0..2)", x.schema()));
  CHECK(sym_is_continuous(shift).continuous);
  CHECK_FALSE(sym_is_onto(shift));
  CHECK(shift.describe() == "R0 -> R0 (n+1)\n");

  auto evens = SymMap::make(x, x, {StrandMap::affine("R0", "R0", {2, 1})});
  CHECK(evens.preimage(parse_set_literal("ray(R0; 3..9)", x.schema())) ==
        parse_set_literal("ray(R0; 2..4)", x.schema()));
  auto interleave = SymMap::make(x2, x, {StrandMap::affine("R0", "R0", {2, 1}), StrandMap::affine("R1", "R0", {2, 1}, {1, 0})});
  CHECK(sym_is_onto(interleave));
  auto gap = SymMap::make(x2, x, {StrandMap::affine("R0", "R0", {2, 1}), StrandMap::affine("R1", "R0", {2, 1}, {3, 0})});
  CHECK_FALSE(sym_is_onto(gap));

  CHECK_THROWS_WITH_AS(SymMap::make(x2, x, {StrandMap::affine("R0", "R0")}), doctest::Contains("SchemaMismatch"), Error);
  CHECK_THROWS_WITH_AS(SymMap::make(x, x, {StrandMap::affine("R0", "R0", {1, 1}, {-1, 0})}),
                       doctest::Contains("UnknownPoint"), Error);
  CHECK_THROWS_WITH_AS(SymMap::make(x, x, {StrandMap::affine("R0", "R0", {0, 1})}), doctest::Contains("FragmentEscape"), Error);

  Spaces s;
  auto bad = SymMap::make(s.e1.space, s.e1.space, {StrandMap::affine("R0", "R0"), StrandMap::to_point("w_R0", rp(0, 0))});
  auto r = sym_is_continuous(bad);
  CHECK_FALSE(r.continuous);
  CHECK(*r.witness == "R0(+end)");

  const SymbolicPretop u = urysohn();
  CHECK(kernels_singleton(u));
  auto uid = SymMap::make(u, u, {StrandMap::to_point("pinf", atom(0)), StrandMap::to_point("minf", atom(1)),
                                 StrandMap::affine("G", "G")});
  CHECK_THROWS_WITH_AS(sym_is_continuous(uid), doctest::Contains("UnclassifiableImageTrace"), Error);
  auto collapse = SymMap::make(u, from_finite(FinitePretop::discrete(1)),
                               {StrandMap::to_point("pinf", atom(0)), StrandMap::to_point("minf", atom(0)),
                                StrandMap::to_point("G", atom(0))});
  CHECK(sym_is_continuous(collapse).continuous);
  const SymbolicPretop two = from_finite(FinitePretop::discrete(2));
  auto fold = SymMap::make(u, two, {StrandMap::to_point("pinf", atom(0)), StrandMap::to_point("minf", atom(1)),
                                    StrandMap::to_point("G", atom(0))});
  auto rf = sym_is_continuous(fold);
  CHECK_FALSE(rf.continuous);
  CHECK(*rf.witness == "G(row +end, col fixed) at ray(p; ..-1)");
  auto split = SymMap::make(u, two, {StrandMap::to_point("pinf", atom(0)), StrandMap::to_point("minf", atom(0)),
                                     StrandMap::to_point("G", atom(1))});
  CHECK(*sym_is_continuous(split).witness == "G(row +end, col fixed) at ray(p; !=0)");
}

TEST_CASE("symbolic continuity agrees with the sampled vicinity definition") {
  Spaces s;
  const std::vector<const SymbolicPretop*> spaces{&s.e1.space, &s.e2.space, &s.o2.space};
  std::mt19937 rng(7);
  int continuous = 0, total = 0;
  for (int round = 0; round < 300; ++round) {
    const SymbolicPretop& src = *spaces[rng() % 3];
    const SymbolicPretop& tgt = *spaces[rng() % 3];
    const GroundSchema& gs = *src.schema();
    const GroundSchema& gt = *tgt.schema();
    auto random_point = [&] {
      const std::size_t nrays = gt.rays().size(), natoms = gt.atoms().size();
      const std::size_t pick = rng() % (nrays + natoms);
      return pick < natoms ? atom(pick) : rp(pick - natoms, static_cast<Coord>(rng() % 3));
    };
    std::vector<StrandMap> strands;
    for (StrandRef st : gs.strands()) {
      if (gs.arity(st) == 0 || rng() % 4 == 0) {
        strands.push_back(StrandMap::to_point(gs.name(st), random_point()));
      } else {
        const std::string to = gt.rays()[rng() % gt.rays().size()].name;
        strands.push_back(StrandMap::affine(gs.name(st), to, {static_cast<Coord>(1 + rng() % 3), 1},
                                            {static_cast<Coord>(rng() % 3), 0}));
      }
    }
    auto f = SymMap::make(src, tgt, strands);
    const bool c = sym_is_continuous(f).continuous;
    CHECK(c == sampled_continuous(f, 6));
    continuous += c;
    ++total;
  }
  CHECK(continuous > 10);
  CHECK(continuous < total);
}

TEST_CASE("extend_map_kappa") {
  Spaces s;
  const SymbolicPretop x = discrete_ray(1), x2 = discrete_ray(2);
  auto shift = extend_map_kappa(SymMap::make(x, x, {StrandMap::affine("R0", "R0", {1, 1}, {1, 0})}), s.e1, s.e1);
  CHECK(shift.assigned == std::vector<std::pair<std::string, std::string>>{{"w_R0", "w_R0"}});
  CHECK(shift.continuity.continuous);

  const SymbolicPretop one = from_finite(FinitePretop::discrete(1));
  auto constant = extend_map_kappa(SymMap::make(x, one, {StrandMap::to_point("R0", atom(0))}), s.e1, end_extension(one));
  CHECK(constant.assigned[0].second == "1");
  CHECK(constant.continuity.continuous);
  CHECK(constant.onto);

  auto evens = extend_map_kappa(SymMap::make(x, x, {StrandMap::affine("R0", "R0", {2, 1})}), s.e1, s.e1);
  CHECK(evens.assigned[0].second == "w_R0");
  CHECK(evens.continuity.continuous);

  // Both compactifications of two rays sit below the end extension.
  auto id2 = SymMap::make(x2, x2, {StrandMap::affine("R0", "R0"), StrandMap::affine("R1", "R1")});
  auto to_one = extend_map_kappa(id2, s.e2, s.o2);
  CHECK(to_one.continuity.continuous);
  CHECK(to_one.onto);
  CHECK(to_one.assigned == std::vector<std::pair<std::string, std::string>>{{"w_R0", "w"}, {"w_R1", "w"}});
  auto to_two = extend_map_kappa(id2, s.e2, s.e2);
  CHECK(to_two.continuity.continuous);
  CHECK(to_two.onto);
  auto back = extend_map_kappa(id2, s.o2, s.e2);
  CHECK_FALSE(back.continuity.continuous);

  CHECK_THROWS_WITH_AS(extend_map_kappa(id2, s.e1, s.e2), doctest::Contains("SchemaMismatch"), Error);
}
