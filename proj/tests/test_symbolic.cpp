#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "pretop/errors.hpp"
#include "pretop/set_literal.hpp"
#include "pretop/traces.hpp"

using namespace pretop;
using namespace pretop::sym;

namespace {

DefSet lit(const SymbolicPretop& x, const char* text) { return parse_set_literal(text, x.schema()); }

Point gp(Coord r, Coord c) { return Point{StrandRef{StrandKind::grid, 0}, r, c}; }
Point atom(std::size_t i) { return Point{StrandRef{StrandKind::atom, i}, 0, 0}; }
Point rp(std::size_t ray, Coord n) { return Point{StrandRef{StrandKind::ray, ray}, n, 0}; }

// Sample points of the carrier inside a box of radius r.
std::vector<Point> sample(const SymbolicPretop& x, Coord r) {
  std::vector<Point> out;
  const GroundSchema& g = *x.schema();
  for (StrandRef s : g.strands()) {
    const int ar = g.arity(s);
    for (Coord a = ar ? -r : 0; a <= (ar ? r : 0); ++a) {
      for (Coord b = ar > 1 ? -r : 0; b <= (ar > 1 ? r : 0); ++b) {
        Point p{s, a, b};
        bool in_domain = true;
        for (int i = 0; i < ar; ++i) {
          const Coord v = i == 0 ? a : b;
          if (v < g.axis(s, i).min() && g.axis(s, i).min() != kNegInf) in_domain = false;
        }
        if (in_domain && x.carrier().contains(p)) out.push_back(p);
      }
    }
  }
  return out;
}

std::vector<SymbolicPretop> all_builtins() {
  return {urysohn(), half_grid(), discrete_ray(1), discrete_ray(2), sym_regularize(urysohn())};
}

// Tail of a trace class inside [b, b + 3] on its end axes.
DefSet tail(const SymbolicPretop& x, const TraceClass& c, Coord p0, Coord p1, Coord b) {
  const GroundSchema& g = *x.schema();
  const Coord pv[2] = {p0, p1};
  std::array<IntervalSet, 2> sel;
  for (int a = 0; a < g.arity(c.strand); ++a) {
    const Axis& ax = g.axis(c.strand, a);
    if (c.dir[a] == 0) {
      sel[a] = IntervalSet::point(ax, pv[a]);
    } else if (c.dir[a] > 0) {
      sel[a] = IntervalSet::range(ax, b, b + 3);
    } else {
      sel[a] = IntervalSet::range(ax, -b - 3, -b);
    }
  }
  if (c.strand.kind == StrandKind::ray) return DefSet::ray(x.schema(), c.strand.index, sel[0]);
  return DefSet::grid(x.schema(), c.strand.index, sel[0], sel[1]);
}

}  // namespace

TEST_CASE("build_symbolic validation") {
  const SymbolicPretop u = urysohn();
  CHECK(u.rules().size() == 4);
  CHECK(discrete_ray(1).rules().size() == 1);

  auto rules = u.rules();
  rules.pop_back();
  CHECK_THROWS_WITH_AS(SymbolicPretop::build(u.schema(), rules), doctest::Contains("PatternGap"), Error);
  rules = u.rules();
  rules.push_back(rules.front());
  CHECK_THROWS_WITH_AS(SymbolicPretop::build(u.schema(), rules), doctest::Contains("PatternOverlap"), Error);

  // template(k) = {row = k}
  auto schema = std::make_shared<const GroundSchema>(
      std::vector<std::string>{}, std::vector<RayDecl>{},
      std::vector<GridDecl>{{"G", Axis::naturals(0), Axis::naturals(0)}});
  const StrandRef g{StrandKind::grid, 0};
  const Lin self{0, 1, 0, 0, 0}, k{0, 0, 0, 1, 0};
  Rule bad{g, {IntervalSet::full(Axis::naturals(0)), IntervalSet::full(Axis::naturals(0))},
           {Piece{g, {AxisBounds{{self}, {self}}, AxisBounds{{self}, {self}}}, {}},
            Piece{g, {AxisBounds{{k}, {k}}, AxisBounds{}}, {}}}};
  CHECK_THROWS_WITH_AS(SymbolicPretop::build(schema, {bad}), doctest::Contains("NonMonotoneRule"), Error);

  Rule shifted{g, bad.pattern, {Piece{g, {AxisBounds{{Lin{1, 1, 0, 0, 0}}, {}}, AxisBounds{}}, {}}}};
  CHECK_THROWS_WITH_AS(SymbolicPretop::build(schema, {shifted}), doctest::Contains("SelfMembershipViolation"),
                       Error);
  CHECK_THROWS_WITH_AS(builtin("sorgenfrey"), doctest::Contains("UnknownBuiltin"), Error);
  CHECK(builtin("discrete_ray(3)").rules().size() == 3);
}

TEST_CASE("templates are monotone and self-containing, concretely") {
  for (const SymbolicPretop& x : all_builtins()) {
    for (const Point& p : sample(x, 4)) {
      DefSet prev = x.vicinity(p, 0);
      CHECK(prev.contains(p));
      for (Coord k = 1; k <= 10; ++k) {
        DefSet cur = x.vicinity(p, k);
        CHECK(prev.includes(cur));
        CHECK(cur.contains(p));
        prev = cur;
      }
    }
  }
}

TEST_CASE("sym_adh examples") {
  const SymbolicPretop u = urysohn();
  CHECK(sym_adh(u, lit(u, "grid(G; cols>0)")) == lit(u, "grid(G; cols>=0) | atom(pinf)"));
  CHECK(sym_adh(u, lit(u, "grid(G; rows=4; cols!=0)")) == lit(u, "grid(G; rows=4)"));
  CHECK(sym_adh(u, lit(u, "empty")).is_empty());
  CHECK(sym_adh(discrete_ray(1), lit(discrete_ray(1), "ray(R0; 3..)")) == lit(discrete_ray(1), "ray(R0; 3..)"));
}

TEST_CASE("sym_adh agrees with the vicinity definition") {
  // x ∈ adh S iff V(x, k) meets S for all k; templates stabilize well before k = 12 here.
  const SymbolicPretop u = urysohn();
  const std::vector<const char*> sets = {"grid(G; cols>0)", "grid(G; rows in 2..3; cols<-2)",
                                         "grid(G; rows>5; cols=3)", "grid(G; cols=0)",
                                         "atom(pinf) | grid(G; rows=1; cols in -1..1)"};
  for (const char* text : sets) {
    const DefSet s = lit(u, text);
    const DefSet a = sym_adh(u, s);
    for (const Point& p : sample(u, 6)) {
      bool meets_all = true;
      for (Coord k = 0; k <= 12; ++k) meets_all = meets_all && u.vicinity(p, k).meets(s);
      CHECK_MESSAGE(a.contains(p) == meets_all, text);
    }
  }
}

TEST_CASE("sym_inh duality on random sets") {
  const SymbolicPretop u = urysohn();
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-4, 4), r(1, 5);
  for (int i = 0; i < 40; ++i) {
    const int r0 = r(rng), c0 = d(rng);
    DefSet s = DefSet::grid(u.schema(), 0, IntervalSet::range(Axis::naturals(1), r0, r0 + r(rng)),
                            IntervalSet::range(Axis::integers(), c0, c0 + r(rng)));
    if (i % 3 == 0) s = s.unite(DefSet::atom(u.schema(), 0));
    if (i % 4 == 0) s = s.complement();
    CHECK(sym_inh(u, s) == sym_adh(u, s.complement()).complement());
    CHECK(s.includes(sym_inh(u, s)));
    CHECK(sym_adh(u, s).includes(s));
  }
}

TEST_CASE("sym_regularize") {
  const SymbolicPretop u = urysohn();
  const SymbolicPretop r = sym_regularize(u);
  for (Coord k = 0; k <= 6; ++k) {
    const std::string kk = std::to_string(k);
    CHECK(r.vicinity(atom(0), k) ==
          lit(r, ("atom(pinf) | grid(G; rows>" + kk + "; cols>=0)").c_str()));
    CHECK(r.vicinity(atom(1), k) ==
          lit(r, ("atom(minf) | grid(G; rows>" + kk + "; cols<=0)").c_str()));
    for (Coord n = 1; n <= 4; ++n) {
      for (Coord m : {-3, -1, 1, 2}) CHECK(r.vicinity(gp(n, m), k) == DefSet::point(r.schema(), gp(n, m)));
    }
  }
  const SymbolicPretop d = discrete_ray(1);
  const SymbolicPretop rd = sym_regularize(d);
  for (Coord n = 0; n <= 8; ++n) {
    for (Coord k = 0; k <= 3; ++k) CHECK(rd.vicinity(rp(0, n), k) == d.vicinity(rp(0, n), k));
  }
  // every rπ-template contains its π-template
  for (const SymbolicPretop& x : all_builtins()) {
    const SymbolicPretop rx = sym_regularize(x);
    for (const Point& p : sample(x, 4)) {
      for (Coord k = 0; k <= 5; ++k) CHECK(rx.vicinity(p, k).includes(x.vicinity(p, k)));
    }
  }
}

TEST_CASE("cl_theta reproduces the two stated closures") {
  const SymbolicPretop u = urysohn();
  const DefSet b = lit(u, "grid(G; cols>0)");
  const DefSet once = b.unite(lit(u, "grid(G; cols=0) | atom(pinf)"));
  CHECK(cl_theta(u, b, 1) == once);
  CHECK(cl_theta(u, b, 2) == once.unite(lit(u, "atom(minf)")));
  CHECK(cl_theta(u, lit(u, "empty"), 3).is_empty());
  CHECK(cl_theta(u, b, 3) == cl_theta(u, b, 2));
}

TEST_CASE("ends") {
  CHECK(ends(*discrete_ray(1).schema()).size() == 1);
  const SymbolicPretop u = urysohn();
  const GroundSchema& g = *u.schema();
  const auto ue = ends(g);
  REQUIRE(ue.size() == 5);
  CHECK(ue[0].label(g) == "G(row fixed, col +end)");
  CHECK(ue[1].label(g) == "G(row fixed, col -end)");
  CHECK(ue[2].label(g) == "G(row +end, col fixed)");
  CHECK(ue[3].label(g) == "G(row +end, col +end)");
  CHECK(ue[4].label(g) == "G(row +end, col -end)");
  CHECK(ends(*from_finite(fixtures::s2()).schema()).empty());
  CHECK(ends(*half_grid().schema()).size() == 3);
}

TEST_CASE("end_converges examples") {
  const SymbolicPretop u = urysohn();
  const auto ue = ends(*u.schema());
  for (Coord n = 1; n <= 6; ++n) {
    CHECK(trace_limits_at(u, ue[0], n) == DefSet::point(u.schema(), gp(n, 0)));
    CHECK(trace_limits_at(u, ue[1], n) == DefSet::point(u.schema(), gp(n, 0)));
  }
  CHECK(trace_limits_at(u, ue[2], 0, 0).is_empty());
  CHECK(trace_limits_at(u, ue[2], 0, 3) == lit(u, "atom(pinf)"));
  CHECK(trace_limits_at(u, ue[2], 0, -2) == lit(u, "atom(minf)"));
  const EndLimits row_end = end_converges(u, ue[2]);
  CHECK(print_set_literal(row_end.converging) == "ray(p; !=0)");
  // θ-vicinities of both infinite points contain {(n,0) : n > k}
  const SymbolicPretop r = sym_regularize(u);
  const DefSet lim = trace_limits_at(r, ue[2], 0, 0);
  CHECK(lim.contains(atom(0)));
  CHECK(lim == lit(r, "atom(pinf) | atom(minf)"));
}

TEST_CASE("trace reduction agrees with vicinity containment") {
  // x ∈ lim T(p) iff every V(x, k) contains a tail of T(p); for the built-ins
  // the tails beyond 3k + 10 decide this.
  for (const SymbolicPretop& x : all_builtins()) {
    const GroundSchema& g = *x.schema();
    for (const TraceClass& c : ends(g)) {
      for (Coord p = -3; p <= 3; ++p) {
        const Coord p0 = c.dir[0] == 0 ? p : 0, p1 = c.dir[1] == 0 ? p : 0;
        bool in_domain = true;
        for (int a = 0; a < g.arity(c.strand); ++a) {
          const Coord v = a == 0 ? p0 : p1;
          if (c.dir[a] == 0 && g.axis(c.strand, a).min() != kNegInf && v < g.axis(c.strand, a).min()) {
            in_domain = false;
          }
        }
        if (!in_domain) continue;
        const DefSet lim = trace_limits_at(x, c, p0, p1);
        for (const Point& pt : sample(x, 4)) {
          bool brute = true;
          for (Coord k = 0; k <= 6; ++k) brute = brute && x.vicinity(pt, k).includes(tail(x, c, p0, p1, 3 * k + 10));
          CHECK_MESSAGE(lim.contains(pt) == brute, c.label(g));
        }
      }
    }
  }
}

TEST_CASE("sym_is_compact examples") {
  const SymbolicPretop u = urysohn();
  auto c = sym_is_compact(u);
  CHECK_FALSE(c.compact);
  CHECK(c.witness == "G(row +end, col 0)");
  CHECK(sym_is_compact(sym_regularize(u)).compact);
  auto d = sym_is_compact(discrete_ray(1));
  CHECK_FALSE(d.compact);
  CHECK(d.witness == "R0(+end)");
  CHECK(sym_is_compact(from_finite(fixtures::s2())).compact);
}

TEST_CASE("sym_compact_at examples") {
  const SymbolicPretop u = urysohn();
  const SymbolicPretop r = sym_regularize(u);
  const DefSet a = lit(u, "grid(G; cols=0) | atom(pinf)");
  CHECK(sym_compact_at(r, a, a).compact);
  const SymbolicPretop sub = sym_restrict(u, a);
  auto sc = sym_compact_at(sub, a, a);
  CHECK_FALSE(sc.compact);
  CHECK(sc.witness == "G(row +end, col 0)");
  const DefSet pinf = lit(u, "atom(pinf)");
  CHECK(sym_compact_at(u, pinf, pinf).compact);
  CHECK_THROWS_WITH_AS(sym_compact_at(u, lit(u, "empty"), pinf), doctest::Contains("EmptyKernel"), Error);
  // parametrized family: rows > k in column 0 is compact at {pinf} only after regularizing
  const Piece tail_rows{StrandRef{StrandKind::grid, 0},
                        {AxisBounds{{Lin{1, 0, 0, 0, 1}}, {}}, AxisBounds{{Lin::constant(0)}, {Lin::constant(0)}}},
                        {}};
  CHECK(sym_compact_at(r, {tail_rows}, pinf).compact);
  CHECK_FALSE(sym_compact_at(u, {tail_rows}, pinf).compact);
  CHECK_FALSE(sym_compact_at(u, {tail_rows}, u.carrier()).compact);
}

TEST_CASE("sym_restrict") {
  const SymbolicPretop u = urysohn();
  const SymbolicPretop r = sym_regularize(u);
  const DefSet a = lit(u, "grid(G; cols=0) | atom(pinf)");
  const SymbolicPretop ra = sym_restrict(r, a);
  const SymbolicPretop ua = sym_restrict(u, a);
  for (Coord k = 0; k <= 5; ++k) {
    CHECK(ra.vicinity(atom(0), k) == lit(u, ("atom(pinf) | grid(G; rows>" + std::to_string(k) + "; cols=0)").c_str()));
    CHECK(ua.vicinity(atom(0), k) == lit(u, "atom(pinf)"));
    for (Coord n = 1; n <= 5; ++n) {
      CHECK(ra.vicinity(gp(n, 0), k) == DefSet::point(u.schema(), gp(n, 0)));
      CHECK(ua.vicinity(gp(n, 0), k) == DefSet::point(u.schema(), gp(n, 0)));
    }
  }
  const SymbolicPretop whole = sym_restrict(u, u.carrier());
  for (const Point& p : sample(u, 3)) {
    for (Coord k = 0; k <= 4; ++k) CHECK(whole.vicinity(p, k) == u.vicinity(p, k));
  }
  CHECK_THROWS_WITH_AS(sym_restrict(u, lit(u, "empty")), doctest::Contains("EmptySubspace"), Error);
}

TEST_CASE("sym_hausdorff") {
  CHECK(sym_hausdorff(urysohn()).hausdorff);
  CHECK(sym_hausdorff(half_grid()).hausdorff);
  CHECK(sym_hausdorff(discrete_ray(2)).hausdorff);
  auto s = sym_hausdorff(from_finite(fixtures::s2()));
  CHECK_FALSE(s.hausdorff);
  REQUIRE(s.witness);
  CHECK(s.witness->first == "atom(a)");
  CHECK(s.witness->second == "atom(b)");
  auto r = sym_hausdorff(sym_regularize(urysohn()));
  CHECK_FALSE(r.hausdorff);
  CHECK(r.witness->first == "atom(pinf)");
  CHECK(r.witness->second == "atom(minf)");
}

TEST_CASE("sym_hausdorff agrees with the finite check on lifted spaces") {
  for (int n = 1; n <= 3; ++n) {
    pretop::for_each_pretop(n, [&](const FinitePretop& f) {
      CHECK(sym_hausdorff(from_finite(f)).hausdorff == pretop::is_hausdorff(f).hausdorff);
      CHECK(sym_is_compact(from_finite(f)).compact);
    });
  }
}

TEST_CASE("truncate") {
  const SymbolicPretop u = urysohn();
  const Truncation t = truncate(u, 5);
  CHECK(t.space.size() == 5 * 11 + 2);
  const Truncation d = truncate(discrete_ray(1), 3);
  CHECK(d.space.size() == 4);
  CHECK(d.space.vicinities() == FinitePretop::discrete(4).vicinities());
  CHECK_THROWS_WITH_AS(truncate(u, 2), doctest::Contains("WindowTooSmall"), Error);
  CHECK_THROWS_WITH_AS(truncate(u, 6), doctest::Contains("SizeLimit"), Error);

  // adh of {col > 0} agrees at the isolated points of the window
  const DefSet b = lit(u, "grid(G; cols>0)");
  Subset clipped;
  for (std::size_t i = 0; i < t.points.size(); ++i) {
    if (b.contains(t.points[i])) clipped = clipped | Subset::single(static_cast<int>(i));
  }
  const Subset fin = t.space.adh(clipped);
  const DefSet sym = sym_adh(u, b);
  for (std::size_t i = 0; i < t.points.size(); ++i) {
    const Point& p = t.points[i];
    if (p.strand.kind != StrandKind::grid || p.b == 0) continue;
    CHECK(fin.contains(static_cast<int>(i)) == sym.contains(p));
  }
}
