#include "pretop/sym_set.hpp"

#include <algorithm>

#include "pretop/errors.hpp"

namespace pretop::sym {

Piece map_piece(const Piece& p, Lin (*fn)(const Lin&)) {
  Piece out;
  out.strand = p.strand;
  for (int a = 0; a < 2; ++a) {
    for (const Lin& l : p.axes[a].lo) out.axes[a].lo.push_back(fn(l));
    for (const Lin& l : p.axes[a].hi) out.axes[a].hi.push_back(fn(l));
  }
  for (const AxisLin& g : p.guards) out.guards.push_back({g.axis, fn(g.lin)});
  return out;
}

namespace {

void add_interval(AxisBounds& ax, const Interval& iv) {
  if (iv.lo != kNegInf) ax.lo.push_back(Lin::constant(iv.lo));
  if (iv.hi != kPosInf) ax.hi.push_back(Lin::constant(iv.hi));
}

}  // namespace

void add_box(std::array<AxisBounds, 2>& axes, const std::array<Interval, 2>& box, int arity) {
  for (int a = 0; a < arity; ++a) add_interval(axes[a], box[a]);
}

std::vector<Piece> boxes_of(const DefSet& s) {
  std::vector<Piece> out;
  const GroundSchema& g = *s.schema();
  for (std::size_t i = 0; i < g.atoms().size(); ++i) {
    if (s.has_atom(i)) out.push_back({StrandRef{StrandKind::atom, i}, {}, {}});
  }
  for (std::size_t i = 0; i < g.rays().size(); ++i) {
    for (const Interval& iv : s.ray_set(i).intervals()) {
      Piece p{StrandRef{StrandKind::ray, i}, {}, {}};
      add_interval(p.axes[0], iv);
      out.push_back(std::move(p));
    }
  }
  for (std::size_t i = 0; i < g.grids().size(); ++i) {
    for (const Rect& r : s.grid_rects(i)) {
      for (const Interval& ri : r.rows.intervals()) {
        for (const Interval& ci : r.cols.intervals()) {
          Piece p{StrandRef{StrandKind::grid, i}, {}, {}};
          add_interval(p.axes[0], ri);
          add_interval(p.axes[1], ci);
          out.push_back(std::move(p));
        }
      }
    }
  }
  return out;
}

namespace {

IntervalSet axis_span(const Axis& axis, const AxisBounds& b) {
  Coord lo = kNegInf, hi = kPosInf;
  for (const Lin& l : b.lo) {
    if (!l.is_constant()) fail(ErrorKind::FragmentEscape, "bound " + to_string(l) + " is not constant");
    lo = std::max(lo, l.c);
  }
  for (const Lin& l : b.hi) {
    if (!l.is_constant()) fail(ErrorKind::FragmentEscape, "bound " + to_string(l) + " is not constant");
    hi = std::min(hi, l.c);
  }
  if (lo != kNegInf && hi != kPosInf && lo > hi) return IntervalSet(axis);
  return IntervalSet::make(axis, {{lo, hi}});
}

}  // namespace

DefSet pieces_to_set(const std::vector<Piece>& pieces, const SchemaPtr& schema) {
  DefSet out = DefSet::empty(schema);
  std::vector<std::vector<Rect>> rects(schema->grids().size());
  for (const Piece& p : pieces) {
    bool holds = true;
    for (const AxisLin& g : p.guards) {
      if (!g.lin.is_constant()) fail(ErrorKind::FragmentEscape, "guard " + to_string(g.lin));
      holds = holds && g.lin.c >= 0;
    }
    if (!holds) continue;
    switch (p.strand.kind) {
      case StrandKind::atom:
        out = out.unite(DefSet::atom(schema, p.strand.index));
        break;
      case StrandKind::ray:
        out = out.unite(DefSet::ray(schema, p.strand.index,
                                    axis_span(schema->axis(p.strand, 0), p.axes[0])));
        break;
      case StrandKind::grid:
        rects[p.strand.index].push_back({axis_span(schema->axis(p.strand, 0), p.axes[0]),
                                         axis_span(schema->axis(p.strand, 1), p.axes[1])});
        break;
    }
  }
  for (std::size_t i = 0; i < rects.size(); ++i) {
    if (!rects[i].empty()) out = out.unite(DefSet::grid_union(schema, i, std::move(rects[i])));
  }
  return out;
}

void pair_bounds(const std::vector<Lin>& lo, const std::vector<Lin>& hi, int axis, Coord floor,
                 std::vector<AxisLin>& out) {
  for (const Lin& h : hi) {
    for (const Lin& l : lo) out.push_back({axis, h - l});
    if (floor != kNegInf) out.push_back({axis, h - Lin::constant(floor)});
  }
}

std::optional<Solved> solve(const std::vector<AxisLin>& constraints) {
  Solved out;
  for (const AxisLin& c : constraints) {
    std::optional<Lin> l = forall_q(c.lin);
    if (!l) return std::nullopt;
    if (l->z == 0) {
      if (l->is_constant()) {
        if (l->c < 0) return std::nullopt;
        continue;
      }
      out.guards.push_back({c.axis, *l});
    } else if (l->z == 1) {
      out.z[c.axis].lo.push_back({-l->c, 0, -l->p, 0, -l->k});
    } else if (l->z == -1) {
      out.z[c.axis].hi.push_back({l->c, 0, l->p, 0, l->k});
    } else {
      fail(ErrorKind::FragmentEscape, "point coefficient outside ±1 in " + to_string(*l));
    }
  }
  return out;
}

namespace {

bool same_shape(const Lin& a, const Lin& b) {
  return a.z == b.z && a.p == b.p && a.q == b.q && a.k == b.k;
}

// Keeps only the tightest bound for every non-constant shape.
void prune(std::vector<Lin>& v, bool lower) {
  std::vector<Lin> out;
  for (const Lin& l : v) {
    auto it = std::find_if(out.begin(), out.end(), [&](const Lin& o) { return same_shape(o, l); });
    if (it == out.end()) {
      out.push_back(l);
    } else if (lower ? l.c > it->c : l.c < it->c) {
      it->c = l.c;
    }
  }
  v = std::move(out);
}

}  // namespace

bool simplify(Piece& p, const GroundSchema& schema) {
  std::vector<AxisLin> kept;
  for (const AxisLin& g : p.guards) {
    if (g.lin.is_constant()) {
      if (g.lin.c < 0) return false;
      continue;
    }
    if (std::find_if(kept.begin(), kept.end(), [&](const AxisLin& o) { return o.lin == g.lin; }) ==
        kept.end()) {
      kept.push_back(g);
    }
  }
  p.guards = std::move(kept);
  const int arity = schema.arity(p.strand);
  for (int a = 0; a < arity; ++a) {
    AxisBounds& ax = p.axes[a];
    prune(ax.lo, true);
    prune(ax.hi, false);
    const Coord floor = schema.axis(p.strand, a).min();
    if (floor != kNegInf) {
      // The domain minimum makes constant lower bounds below it redundant.
      std::erase_if(ax.lo, [&](const Lin& l) { return l.is_constant() && l.c <= floor; });
    }
    std::vector<Lin> lows = ax.lo;
    if (floor != kNegInf) lows.push_back(Lin::constant(floor));
    for (const Lin& h : ax.hi) {
      for (const Lin& l : lows) {
        Lin d = h - l;
        if (d.z == 0 && d.p == 0 && d.q <= 0 && d.k <= 0 && d.c < 0) return false;
      }
    }
  }
  return true;
}

std::vector<std::array<Interval, 2>> interval_boxes(const std::array<IntervalSet, 2>& pattern,
                                                    int arity) {
  std::vector<std::array<Interval, 2>> out;
  if (arity == 0) return {std::array<Interval, 2>{}};
  for (const Interval& a : pattern[0].intervals()) {
    if (arity == 1) {
      out.push_back({a, Interval{}});
      continue;
    }
    for (const Interval& b : pattern[1].intervals()) out.push_back({a, b});
  }
  return out;
}

std::string print_piece(const Piece& p, const GroundSchema& schema, bool parametric) {
  static const char* const kSelf[2] = {"n", "m"};
  static const char* const kParam[2] = {"p", "q"};
  const std::string& name = schema.name(p.strand);
  const int arity = schema.arity(p.strand);
  std::string out;
  switch (p.strand.kind) {
    case StrandKind::atom:
      out = "atom(" + name;
      break;
    case StrandKind::ray:
      out = "ray(" + name;
      break;
    case StrandKind::grid:
      out = "grid(" + name;
      break;
  }
  for (int a = 0; a < arity; ++a) {
    const char* axis = p.strand.kind == StrandKind::ray ? "" : (a == 0 ? "rows" : "cols");
    const char* zn = parametric ? kParam[a] : kSelf[a];
    auto show = [&](const Lin& l) { return to_string(l, zn, kParam[a]); };
    const AxisBounds& ax = p.axes[a];
    if (ax.lo.size() == 1 && ax.hi.size() == 1 && ax.lo[0] == ax.hi[0]) {
      out += std::string("; ") + axis + "=" + show(ax.lo[0]);
      continue;
    }
    for (const Lin& l : ax.lo) out += std::string("; ") + axis + ">=" + show(l);
    for (const Lin& l : ax.hi) out += std::string("; ") + axis + "<=" + show(l);
  }
  out += ")";
  for (const AxisLin& g : p.guards) out += " if " + to_string(g.lin, "z", kParam[g.axis]) + ">=0";
  return out;
}

}  // namespace pretop::sym
