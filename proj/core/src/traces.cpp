#include "pretop/traces.hpp"

#include "pretop/errors.hpp"
#include "pretop/set_literal.hpp"

namespace pretop::sym {

int TraceClass::params(const GroundSchema& g) const {
  int n = 0;
  for (int a = 0; a < g.arity(strand); ++a) n += dir[a] == 0;
  return n;
}

namespace {

std::string dir_text(int d) { return d > 0 ? "+end" : "-end"; }

}  // namespace

std::string TraceClass::label(const GroundSchema& g) const {
  const std::string& name = g.name(strand);
  switch (strand.kind) {
    case StrandKind::atom:
      return name;
    case StrandKind::ray:
      return name + "(" + (dir[0] == 0 ? "n" : dir_text(dir[0])) + ")";
    case StrandKind::grid:
      return name + "(row " + (dir[0] == 0 ? "fixed" : dir_text(dir[0])) + ", col " +
             (dir[1] == 0 ? "fixed" : dir_text(dir[1])) + ")";
  }
  return name;
}

std::string TraceClass::label_at(const GroundSchema& g, const Point& param) const {
  const std::string& name = g.name(strand);
  const std::array<Coord, 2> v = param_values(g, *this, param);
  auto part = [&](int a) { return dir[a] == 0 ? std::to_string(v[a]) : dir_text(dir[a]); };
  switch (strand.kind) {
    case StrandKind::atom:
      return name;
    case StrandKind::ray:
      return name + "(" + part(0) + ")";
    case StrandKind::grid:
      return name + "(row " + part(0) + ", col " + part(1) + ")";
  }
  return name;
}

std::vector<TraceClass> point_classes(const GroundSchema& g) {
  std::vector<TraceClass> out;
  for (StrandRef s : g.strands()) out.push_back({s, {0, 0}});
  return out;
}

std::vector<TraceClass> ends(const GroundSchema& g) {
  std::vector<TraceClass> out;
  for (StrandRef s : g.strands()) {
    if (s.kind == StrandKind::ray) {
      out.push_back({s, {1, 0}});
      if (g.axis(s, 0).has_minus_side()) out.push_back({s, {-1, 0}});
    } else if (s.kind == StrandKind::grid) {
      std::vector<int> rd{1}, cd{1};
      if (g.axis(s, 0).has_minus_side()) rd.push_back(-1);
      if (g.axis(s, 1).has_minus_side()) cd.push_back(-1);
      for (int d : cd) out.push_back({s, {0, d}});
      for (int d : rd) out.push_back({s, {d, 0}});
      for (int r : rd) {
        for (int d : cd) out.push_back({s, {r, d}});
      }
    }
  }
  return out;
}

SchemaPtr param_schema(const GroundSchema& g, const TraceClass& c) {
  std::vector<Axis> fixed;
  for (int a = 0; a < g.arity(c.strand); ++a) {
    if (c.dir[a] == 0) fixed.push_back(g.axis(c.strand, a));
  }
  if (fixed.empty()) {
    return std::make_shared<const GroundSchema>(std::vector<std::string>{"*"}, std::vector<RayDecl>{},
                                                std::vector<GridDecl>{});
  }
  if (fixed.size() == 1) {
    return std::make_shared<const GroundSchema>(std::vector<std::string>{},
                                                std::vector<RayDecl>{{"p", fixed[0]}},
                                                std::vector<GridDecl>{});
  }
  return std::make_shared<const GroundSchema>(std::vector<std::string>{}, std::vector<RayDecl>{},
                                              std::vector<GridDecl>{{"p", fixed[0], fixed[1]}});
}

Point param_point(const GroundSchema& g, const TraceClass& c, const SchemaPtr& ps, Coord a, Coord b) {
  const std::array<Coord, 2> v{a, b};
  std::vector<Coord> fixed;
  for (int ax = 0; ax < g.arity(c.strand); ++ax) {
    if (c.dir[ax] == 0) fixed.push_back(v[ax]);
  }
  if (fixed.empty()) return Point{StrandRef{StrandKind::atom, 0}, 0, 0};
  if (fixed.size() == 1) return Point{StrandRef{StrandKind::ray, 0}, fixed[0], 0};
  (void)ps;
  return Point{StrandRef{StrandKind::grid, 0}, fixed[0], fixed[1]};
}

std::array<Coord, 2> param_values(const GroundSchema& g, const TraceClass& c, const Point& p) {
  std::array<Coord, 2> out{0, 0};
  const Coord src[2] = {p.a, p.b};
  int next = 0;
  for (int ax = 0; ax < g.arity(c.strand); ++ax) {
    if (c.dir[ax] == 0) out[ax] = src[next++];
  }
  return out;
}

namespace {

// Parameters satisfying constraints over P, as a DefSet on the class's
// parameter schema.
DefSet region(const GroundSchema& g, const TraceClass& c, const SchemaPtr& ps,
              const std::vector<AxisLin>& cs) {
  for (const AxisLin& l : cs) {
    if (l.lin.is_constant() && l.lin.c < 0) return DefSet::empty(ps);
    if (l.lin.p != 0 && (l.axis >= g.arity(c.strand) || c.dir[l.axis] != 0)) {
      fail(ErrorKind::FragmentEscape, "constraint on a free axis");
    }
  }
  std::vector<IntervalSet> sets;
  for (int a = 0; a < g.arity(c.strand); ++a) {
    if (c.dir[a] == 0) sets.push_back(p_region(g.axis(c.strand, a), a, cs));
  }
  switch (sets.size()) {
    case 0:
      return DefSet::full(ps);
    case 1:
      return DefSet::ray(ps, 0, sets[0]);
    default:
      return DefSet::grid(ps, 0, sets[0], sets[1]);
  }
}

const Lin kP{0, 0, 1, 0, 0};

}  // namespace

std::vector<Piece> trace_limits(const SymbolicPretop& x, const TraceClass& c) {
  const GroundSchema& g = *x.schema();
  const int arity = g.arity(c.strand);
  std::vector<Piece> out;
  for (const Rule& r : x.rules()) {
    const int self_arity = g.arity(r.strand);
    for (const Piece& t : r.tmpl) {
      if (t.strand != c.strand) continue;
      std::vector<AxisLin> cs;
      bool member = true;
      for (int a = 0; a < arity && member; ++a) {
        const AxisBounds& ax = t.axes[a];
        if (c.dir[a] == 0) {
          for (const Lin& l : ax.lo) cs.push_back({a, kP - l});
          for (const Lin& h : ax.hi) cs.push_back({a, h - kP});
        } else if (c.dir[a] > 0) {
          member = ax.hi.empty();
        } else {
          member = ax.lo.empty();
        }
      }
      if (!member) continue;
      std::optional<Solved> sol = solve(cs);
      if (!sol) continue;
      for (const auto& box : interval_boxes(r.pattern, self_arity)) {
        Piece p{r.strand, sol->z, sol->guards};
        add_box(p.axes, box, self_arity);
        if (simplify(p, g)) out.push_back(std::move(p));
      }
    }
  }
  return out;
}

DefSet trace_limits_at(const SymbolicPretop& x, const TraceClass& c, Coord a, Coord b) {
  const Coord v[2] = {a, b};
  std::vector<Piece> bound;
  for (const Piece& p : trace_limits(x, c)) {
    Piece q{p.strand, {}, {}};
    for (int ax = 0; ax < 2; ++ax) {
      for (const Lin& l : p.axes[ax].lo) q.axes[ax].lo.push_back(bind_p(l, v[ax]));
      for (const Lin& l : p.axes[ax].hi) q.axes[ax].hi.push_back(bind_p(l, v[ax]));
    }
    for (const AxisLin& gd : p.guards) q.guards.push_back({gd.axis, bind_p(gd.lin, v[gd.axis])});
    bound.push_back(std::move(q));
  }
  return pieces_to_set(bound, x.schema()).intersect(x.carrier());
}

namespace {

// Parameters whose T(p) meets A in its limit set.
DefSet limit_meets(const SymbolicPretop& x, const TraceClass& c, const SchemaPtr& ps,
                   const std::vector<Piece>& limits, const std::vector<Piece>& boxes) {
  const GroundSchema& g = *x.schema();
  DefSet out = DefSet::empty(ps);
  for (const Piece& l : limits) {
    for (const Piece& b : boxes) {
      if (b.strand != l.strand) continue;
      std::vector<AxisLin> cs = l.guards;
      for (int a = 0; a < g.arity(l.strand); ++a) {
        std::vector<Lin> lo = l.axes[a].lo, hi = l.axes[a].hi;
        lo.insert(lo.end(), b.axes[a].lo.begin(), b.axes[a].lo.end());
        hi.insert(hi.end(), b.axes[a].hi.begin(), b.axes[a].hi.end());
        pair_bounds(lo, hi, a, g.axis(l.strand, a).min(), cs);
      }
      out = out.unite(region(g, c, ps, cs));
    }
  }
  return out;
}

// Parameters p with F ⊆ T(p), i.e. some piece f(k) ∈ T(p) for every k.
DefSet family_in_trace(const GroundSchema& g, const TraceClass& c, const SchemaPtr& ps,
                       const std::vector<Piece>& family) {
  DefSet out = DefSet::empty(ps);
  const Lin p_as_z{0, 1, 0, 0, 0};
  auto k_as_q = [](const Lin& l) { return Lin{l.c, 0, 0, l.k, 0}; };
  for (const Piece& f : family) {
    if (f.strand != c.strand) continue;
    std::vector<AxisLin> cs;
    bool member = true;
    for (int a = 0; a < g.arity(c.strand) && member; ++a) {
      const AxisBounds& ax = f.axes[a];
      if (c.dir[a] == 0) {
        for (const Lin& l : ax.lo) cs.push_back({a, p_as_z - k_as_q(l)});
        for (const Lin& h : ax.hi) cs.push_back({a, k_as_q(h) - p_as_z});
      } else if (c.dir[a] > 0) {
        member = ax.hi.empty();
      } else {
        member = ax.lo.empty();
      }
    }
    if (!member) continue;
    std::optional<Solved> sol = solve(cs);
    if (!sol) continue;
    std::vector<AxisLin> pc;
    for (int a = 0; a < 2; ++a) {
      for (const Lin& l : sol->z[a].lo) pc.push_back({a, Lin{-l.c, 0, 1, 0, 0}});
      for (const Lin& h : sol->z[a].hi) pc.push_back({a, Lin{h.c, 0, -1, 0, 0}});
    }
    for (const AxisLin& gd : sol->guards) pc.push_back(gd);
    out = out.unite(region(g, c, ps, pc));
  }
  return out;
}

}  // namespace

DefSet limits_meeting(const SymbolicPretop& x, const TraceClass& c, const DefSet& a) {
  return limit_meets(x, c, param_schema(*x.schema(), c), trace_limits(x, c), boxes_of(a.intersect(x.carrier())));
}

DefSet trace_domain(const SymbolicPretop& x, const TraceClass& c) {
  const GroundSchema& g = *x.schema();
  std::vector<Piece> family;
  for (const Piece& p : boxes_of(x.carrier())) family.push_back(map_piece(p, as_set));
  return family_in_trace(g, c, param_schema(g, c), family);
}

EndLimits end_converges(const SymbolicPretop& x, const TraceClass& c) {
  const GroundSchema& g = *x.schema();
  const SchemaPtr ps = param_schema(g, c);
  EndLimits out{c, trace_limits(x, c), DefSet::empty(ps), DefSet::full(ps)};
  out.converging = limit_meets(x, c, ps, out.limits, boxes_of(x.carrier()));
  return out;
}

SymCompactReport sym_compact_at(const SymbolicPretop& x, const std::vector<Piece>& family,
                                const DefSet& a) {
  const GroundSchema& g = *x.schema();
  const std::vector<Piece> boxes = boxes_of(a.intersect(x.carrier()));
  std::vector<TraceClass> classes = point_classes(g);
  for (const TraceClass& e : ends(g)) classes.push_back(e);
  for (const TraceClass& c : classes) {
    const SchemaPtr ps = param_schema(g, c);
    const DefSet inside = family_in_trace(g, c, ps, family);
    if (inside.is_empty()) continue;
    const DefSet bad = inside.difference(limit_meets(x, c, ps, trace_limits(x, c), boxes));
    if (bad.is_empty()) continue;
    SymCompactReport r;
    r.compact = false;
    r.cls = c;
    r.params = bad;
    std::optional<Point> least = bad.least_point();
    r.witness = least ? c.label_at(g, *least) : c.label(g) + " at " + print_set_literal(bad);
    return r;
  }
  return {};
}

SymCompactReport sym_compact_at(const SymbolicPretop& x, const DefSet& f, const DefSet& a) {
  if (f.intersect(x.carrier()).is_empty()) fail(ErrorKind::EmptyKernel, "filter kernel is empty");
  std::vector<Piece> family;
  for (const Piece& p : boxes_of(f.intersect(x.carrier()))) family.push_back(map_piece(p, as_set));
  return sym_compact_at(x, family, a);
}

SymCompactReport sym_is_compact(const SymbolicPretop& x) {
  return sym_compact_at(x, x.carrier(), x.carrier());
}

}  // namespace pretop::sym
