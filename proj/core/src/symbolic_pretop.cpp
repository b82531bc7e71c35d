#include "pretop/symbolic_pretop.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "pretop/errors.hpp"
#include "pretop/set_literal.hpp"

namespace pretop::sym {

namespace {

Lin bind_zq(const Lin& l, Coord z, Coord q) { return Lin::constant(l.c + l.z * z + l.q * q); }

Coord coord(const Point& x, int a) { return a == 0 ? x.a : x.b; }

bool valid_strand(const GroundSchema& g, StrandRef s) {
  switch (s.kind) {
    case StrandKind::atom:
      return s.index < g.atoms().size();
    case StrandKind::ray:
      return s.index < g.rays().size();
    case StrandKind::grid:
      return s.index < g.grids().size();
  }
  return false;
}

DefSet pattern_of(const SchemaPtr& schema, const Rule& r) {
  switch (r.strand.kind) {
    case StrandKind::atom:
      return DefSet::atom(schema, r.strand.index);
    case StrandKind::ray:
      return DefSet::ray(schema, r.strand.index, r.pattern[0]);
    case StrandKind::grid:
      return DefSet::grid(schema, r.strand.index, r.pattern[0], r.pattern[1]);
  }
  return DefSet::empty(schema);
}

void check_template(const GroundSchema& g, const Rule& r, const std::string& label) {
  const int self_arity = g.arity(r.strand);
  for (const Piece& t : r.tmpl) {
    if (!valid_strand(g, t.strand)) fail(ErrorKind::SchemaMismatch, "template strand outside the schema");
    if (!t.guards.empty()) fail(ErrorKind::FragmentEscape, "template pieces carry no side conditions");
    const int arity = g.arity(t.strand);
    for (int a = 0; a < 2; ++a) {
      const AxisBounds& ax = t.axes[a];
      if (a >= arity && (!ax.lo.empty() || !ax.hi.empty())) {
        fail(ErrorKind::AxisMismatch, "bound on a missing axis in rule " + label);
      }
      auto check = [&](const Lin& l, bool lower) {
        if (l.p != 0 || l.k != 0 || (l.z != 0 && l.z != 1) || (l.z == 1 && a >= self_arity)) {
          fail(ErrorKind::FragmentEscape, "bound " + to_string(l) + " in rule " + label);
        }
        if (lower ? l.q < 0 : l.q > 0) {
          fail(ErrorKind::NonMonotoneRule, "bound " + to_string(l) + " in rule " + label +
                                               (lower ? " decreases" : " increases") + " with k");
        }
      };
      for (const Lin& l : ax.lo) check(l, true);
      for (const Lin& l : ax.hi) check(l, false);
    }
  }
}

// Points of the pattern lying in every V(x, k).
DefSet self_members(const SchemaPtr& schema, const Rule& r) {
  const int arity = schema->arity(r.strand);
  std::vector<Piece> found;
  for (const Piece& t : r.tmpl) {
    if (t.strand != r.strand) continue;
    std::vector<AxisLin> cs;
    const Lin self{0, 1, 0, 0, 0};
    for (int a = 0; a < arity; ++a) {
      for (const Lin& l : t.axes[a].lo) cs.push_back({a, self - l});
      for (const Lin& h : t.axes[a].hi) cs.push_back({a, h - self});
    }
    std::optional<Solved> s = solve(cs);
    if (!s) continue;
    for (const auto& box : interval_boxes(r.pattern, arity)) {
      Piece p{r.strand, s->z, s->guards};
      add_box(p.axes, box, arity);
      found.push_back(std::move(p));
    }
  }
  return pieces_to_set(found, schema);
}

}  // namespace

SymbolicPretop SymbolicPretop::build(SchemaPtr schema, std::vector<Rule> rules,
                                     std::optional<DefSet> carrier) {
  SymbolicPretop x;
  x.schema_ = schema;
  x.carrier_ = carrier ? *carrier : DefSet::full(schema);
  if (!same_schema(x.carrier_.schema(), schema)) fail(ErrorKind::SchemaMismatch, "carrier schema");
  const GroundSchema& g = *schema;
  DefSet covered = DefSet::empty(schema);
  for (Rule& r : rules) {
    if (!valid_strand(g, r.strand)) fail(ErrorKind::SchemaMismatch, "rule strand outside the schema");
    const int arity = g.arity(r.strand);
    for (int a = 0; a < 2; ++a) {
      if (a < arity) {
        if (r.pattern[a].axis() != g.axis(r.strand, a)) {
          fail(ErrorKind::AxisMismatch, "pattern axis differs from the strand axis");
        }
      } else {
        r.pattern[a] = IntervalSet();
      }
    }
    const DefSet pat = pattern_of(schema, r).intersect(x.carrier_);
    const std::string label = print_set_literal(pat);
    if (covered.meets(pat)) {
      fail(ErrorKind::PatternOverlap, label + " overlaps an earlier pattern at " +
                                          print_point(g, *covered.intersect(pat).least_point()));
    }
    covered = covered.unite(pat);
    check_template(g, r, label);
    const DefSet missing = pat.difference(self_members(schema, r));
    if (!missing.is_empty()) {
      std::optional<Point> p = missing.least_point();
      fail(ErrorKind::SelfMembershipViolation,
           (p ? print_point(g, *p) : print_set_literal(missing)) + " lies outside its own vicinity");
    }
  }
  const DefSet gap = x.carrier_.difference(covered);
  if (!gap.is_empty()) {
    std::optional<Point> p = gap.least_point();
    fail(ErrorKind::PatternGap, "no rule covers " + (p ? print_point(g, *p) : print_set_literal(gap)));
  }
  x.rules_ = std::move(rules);
  return x;
}

DefSet SymbolicPretop::pattern_set(std::size_t rule) const {
  return pattern_of(schema_, rules_.at(rule)).intersect(carrier_);
}

std::string SymbolicPretop::rule_label(std::size_t rule) const {
  return print_set_literal(pattern_set(rule));
}

std::size_t SymbolicPretop::rule_of(const Point& x) const {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    if (rules_[i].strand != x.strand) continue;
    if (pattern_set(i).contains(x)) return i;
  }
  fail(ErrorKind::UnknownPoint, print_point(*schema_, x) + " is not in the carrier");
}

DefSet SymbolicPretop::vicinity(const Point& x, Coord k) const {
  const Rule& r = rules_.at(rule_of(x));
  std::vector<Piece> pieces;
  for (const Piece& t : r.tmpl) {
    Piece p{t.strand, {}, {}};
    for (int a = 0; a < 2; ++a) {
      for (const Lin& l : t.axes[a].lo) p.axes[a].lo.push_back(bind_zq(l, coord(x, a), k));
      for (const Lin& l : t.axes[a].hi) p.axes[a].hi.push_back(bind_zq(l, coord(x, a), k));
    }
    pieces.push_back(std::move(p));
  }
  return pieces_to_set(pieces, schema_).intersect(carrier_);
}

Coord SymbolicPretop::constant_radius() const {
  Coord r = carrier_.finite_radius();
  for (const Rule& rule : rules_) {
    for (const IntervalSet& s : rule.pattern) r = std::max(r, s.finite_radius());
    for (const Piece& t : rule.tmpl) {
      for (const AxisBounds& ax : t.axes) {
        for (const Lin& l : ax.lo) r = std::max(r, std::abs(l.c));
        for (const Lin& l : ax.hi) r = std::max(r, std::abs(l.c));
      }
    }
  }
  for (StrandRef s : schema_->strands()) {
    for (int a = 0; a < schema_->arity(s); ++a) {
      const Axis& ax = schema_->axis(s, a);
      if (ax.kind == Axis::Kind::naturals) r = std::max(r, std::abs(ax.start));
    }
  }
  return r;
}

std::string SymbolicPretop::describe() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    os << rule_label(i) << " ->";
    const auto& t = rules_[i].tmpl;
    for (std::size_t j = 0; j < t.size(); ++j) os << (j ? " | " : " ") << print_piece(t[j], *schema_);
    os << "\n";
  }
  return os.str();
}

namespace {

// Adherence of a family given by pieces in set role: pieces on rule strands
// whose bounds mention P and K, with guards on P and K.
std::vector<Piece> adh_pieces(const SymbolicPretop& x, const std::vector<Piece>& family) {
  const GroundSchema& g = *x.schema();
  std::vector<Piece> out;
  for (const Rule& r : x.rules()) {
    const int self_arity = g.arity(r.strand);
    for (const Piece& t : r.tmpl) {
      const int arity = g.arity(t.strand);
      for (const Piece& s : family) {
        if (s.strand != t.strand) continue;
        std::vector<AxisLin> cs = s.guards;
        for (int a = 0; a < arity; ++a) {
          std::vector<Lin> lo = t.axes[a].lo, hi = t.axes[a].hi;
          lo.insert(lo.end(), s.axes[a].lo.begin(), s.axes[a].lo.end());
          hi.insert(hi.end(), s.axes[a].hi.begin(), s.axes[a].hi.end());
          pair_bounds(lo, hi, a, g.axis(t.strand, a).min(), cs);
        }
        std::optional<Solved> sol = solve(cs);
        if (!sol) continue;
        for (const auto& box : interval_boxes(r.pattern, self_arity)) {
          Piece p{r.strand, sol->z, sol->guards};
          add_box(p.axes, box, self_arity);
          if (simplify(p, g)) out.push_back(std::move(p));
        }
      }
    }
  }
  return out;
}

}  // namespace

DefSet sym_adh(const SymbolicPretop& x, const DefSet& s) {
  const DefSet inside = s.intersect(x.carrier());
  return pieces_to_set(adh_pieces(x, boxes_of(inside)), x.schema()).intersect(x.carrier());
}

DefSet sym_inh(const SymbolicPretop& x, const DefSet& s) {
  return x.carrier().difference(sym_adh(x, x.carrier().difference(s)));
}

namespace {

// False when some lower/upper pair of a piece with bounds in P and K
// already fails at k = 0 for every P in the rule's pattern.
bool possible_on(const Piece& p, const Rule& r, const GroundSchema& g) {
  for (int a = 0; a < g.arity(p.strand); ++a) {
    std::vector<AxisLin> cs;
    pair_bounds(p.axes[a].lo, p.axes[a].hi, a, g.axis(p.strand, a).min(), cs);
    for (const AxisLin& c : cs) {
      Lin d = c.lin;
      if (d.k > 0 || d.z != 0 || d.q != 0 || d.p < -1 || d.p > 1) continue;
      d.k = 0;
      const int pa = a;
      if (d.p != 0 && pa >= g.arity(r.strand)) continue;
      const IntervalSet dom = d.p != 0 ? r.pattern[pa] : IntervalSet();
      if (d.p == 0) {
        if (d.c < 0) return false;
        continue;
      }
      if (p_region(dom.axis(), pa, {{pa, d}}).intersect(dom).empty()) return false;
    }
  }
  return true;
}

}  // namespace

namespace {

// Splits each pattern axis at the endpoints of the guard regions.
std::array<std::vector<IntervalSet>, 2> cells_of(const Rule& r, int arity,
                                                 const std::array<std::vector<Coord>, 2>& cuts) {
  std::array<std::vector<IntervalSet>, 2> out;
  for (int a = 0; a < arity; ++a) {
    const IntervalSet& dom = r.pattern[a];
    std::vector<Coord> c = cuts[a];
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    Coord lo = kNegInf;
    for (Coord cut : c) {
      const IntervalSet part = dom.intersect(IntervalSet::make(dom.axis(), {{lo, cut - 1}}));
      if (!part.empty()) out[a].push_back(part);
      lo = cut;
    }
    const IntervalSet last = dom.intersect(IntervalSet::make(dom.axis(), {{lo, kPosInf}}));
    if (!last.empty()) out[a].push_back(last);
  }
  return out;
}

// Merges rules with equal templates whose patterns differ on one axis only.
void merge_rules(std::vector<Rule>& rules, int arity) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < rules.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < rules.size() && !changed; ++j) {
        if (rules[i].tmpl != rules[j].tmpl) continue;
        int differing = -1, count = 0;
        for (int a = 0; a < arity; ++a) {
          if (rules[i].pattern[a] != rules[j].pattern[a]) {
            differing = a;
            ++count;
          }
        }
        if (count > 1) continue;
        if (differing >= 0) {
          rules[i].pattern[differing] = rules[i].pattern[differing].unite(rules[j].pattern[differing]);
        }
        rules.erase(rules.begin() + static_cast<std::ptrdiff_t>(j));
        changed = true;
      }
    }
  }
}

}  // namespace

SymbolicPretop sym_regularize(const SymbolicPretop& x) {
  const GroundSchema& g = *x.schema();
  std::vector<Rule> rules;
  for (const Rule& r : x.rules()) {
    const int arity = g.arity(r.strand);
    std::vector<Piece> family;
    for (const Piece& t : r.tmpl) family.push_back(map_piece(t, as_set));
    std::vector<Piece> candidates;
    std::array<std::vector<Coord>, 2> cuts;
    for (Piece& p : adh_pieces(x, family)) {
      bool keep = true;
      for (const AxisLin& gd : p.guards) {
        if (gd.lin.k < 0) {
          keep = false;  // present for finitely many k only
          break;
        }
        if (gd.lin.k > 0 || gd.lin.z != 0 || gd.lin.q != 0 || gd.axis >= arity) {
          fail(ErrorKind::FragmentEscape, "guard " + to_string(gd.lin) + " in regularization");
        }
        const IntervalSet region = p_region(r.pattern[gd.axis].axis(), gd.axis, {gd});
        for (const Interval& iv : region.intervals()) {
          if (iv.lo != kNegInf) cuts[gd.axis].push_back(iv.lo);
          if (iv.hi != kPosInf) cuts[gd.axis].push_back(iv.hi + 1);
        }
      }
      if (keep) candidates.push_back(std::move(p));
    }
    const auto cells = cells_of(r, arity, cuts);
    std::vector<Rule> split;
    auto emit = [&](const std::array<IntervalSet, 2>& pattern) {
      Rule nr{r.strand, pattern, {}};
      for (const Piece& c : candidates) {
        bool keep = true;
        for (const AxisLin& gd : c.guards) {
          const IntervalSet dom = pattern[gd.axis];
          if (p_region(dom.axis(), gd.axis, {gd}).intersect(dom).empty()) keep = false;
        }
        if (!keep || !possible_on(c, nr, g)) continue;
        Piece p = c;
        p.guards.clear();
        Piece tp = map_piece(p, as_template);
        if (std::find(nr.tmpl.begin(), nr.tmpl.end(), tp) == nr.tmpl.end()) nr.tmpl.push_back(std::move(tp));
      }
      split.push_back(std::move(nr));
    };
    if (arity == 0) {
      emit(r.pattern);
    } else if (arity == 1) {
      for (const IntervalSet& c0 : cells[0]) emit({c0, IntervalSet()});
    } else {
      for (const IntervalSet& c0 : cells[0]) {
        for (const IntervalSet& c1 : cells[1]) emit({c0, c1});
      }
    }
    merge_rules(split, arity);
    for (Rule& nr : split) rules.push_back(std::move(nr));
  }
  return SymbolicPretop::build(x.schema(), std::move(rules), x.carrier());
}

DefSet cl_theta(const SymbolicPretop& x, const DefSet& s, int iterations) {
  const SymbolicPretop r = sym_regularize(x);
  DefSet cur = s.intersect(x.carrier());
  for (int i = 0; i < iterations; ++i) cur = sym_adh(r, cur);
  return cur;
}

SymbolicPretop sym_restrict(const SymbolicPretop& x, const DefSet& a) {
  const DefSet carrier = a.intersect(x.carrier());
  if (carrier.is_empty()) fail(ErrorKind::EmptySubspace, "restriction to the empty set");
  const GroundSchema& g = *x.schema();
  const std::vector<Piece> boxes = boxes_of(carrier);
  std::vector<Rule> rules;
  for (std::size_t i = 0; i < x.rules().size(); ++i) {
    const Rule& r = x.rules()[i];
    std::vector<Piece> tmpl;
    for (const Piece& t : r.tmpl) {
      for (const Piece& b : boxes) {
        if (b.strand != t.strand) continue;
        Piece p = t;
        for (int ax = 0; ax < 2; ++ax) {
          p.axes[ax].lo.insert(p.axes[ax].lo.end(), b.axes[ax].lo.begin(), b.axes[ax].lo.end());
          p.axes[ax].hi.insert(p.axes[ax].hi.end(), b.axes[ax].hi.begin(), b.axes[ax].hi.end());
        }
        if (simplify(p, g)) tmpl.push_back(std::move(p));
      }
    }
    const DefSet pat = x.pattern_set(i).intersect(carrier);
    for (const Piece& b : boxes_of(pat)) {
      Rule nr{r.strand, {}, tmpl};
      for (int ax = 0; ax < g.arity(r.strand); ++ax) {
        Coord lo = kNegInf, hi = kPosInf;
        for (const Lin& l : b.axes[ax].lo) lo = std::max(lo, l.c);
        for (const Lin& l : b.axes[ax].hi) hi = std::min(hi, l.c);
        nr.pattern[ax] = IntervalSet::make(g.axis(r.strand, ax), {{lo, hi}});
      }
      rules.push_back(std::move(nr));
    }
  }
  return SymbolicPretop::build(x.schema(), std::move(rules), carrier);
}

namespace {

// Integer feasibility of constraints c + z·x + p·y ≥ 0 with at most one
// positive and one negative unit coefficient (difference constraints).
bool feasible_pair(const std::vector<Lin>& cs) {
  // Nodes 0 (constant zero), 1 (x), 2 (y); edge u→w with weight d encodes w ≤ u + d.
  struct Edge {
    int u, w;
    Coord d;
  };
  std::vector<Edge> edges;
  for (const Lin& l : cs) {
    if (l.z == 0 && l.p == 0) {
      if (l.c < 0) return false;
      continue;
    }
    int pos = -1, neg = -1;
    auto place = [&](int coef, int node) {
      if (coef == 1) {
        if (pos >= 0) fail(ErrorKind::FragmentEscape, "not a difference constraint: " + to_string(l));
        pos = node;
      } else if (coef == -1) {
        neg = node;
      } else if (coef != 0) {
        fail(ErrorKind::FragmentEscape, "not a difference constraint: " + to_string(l));
      }
    };
    place(l.z, 1);
    place(l.p, 2);
    if (pos < 0) pos = 0;
    if (neg < 0) neg = 0;
    // v_pos − v_neg ≥ −c  ⇔  v_neg ≤ v_pos + c
    edges.push_back({pos, neg, l.c});
  }
  Coord dist[3] = {0, 0, 0};
  for (int round = 0; round < 3; ++round) {
    for (const Edge& e : edges) dist[e.w] = std::min(dist[e.w], dist[e.u] + e.d);
  }
  for (const Edge& e : edges) {
    if (dist[e.u] + e.d < dist[e.w]) return false;
  }
  return true;
}

Lin as_other(const Lin& l) { return {l.c, 0, l.z, l.q, 0}; }

}  // namespace

SymHausdorffReport sym_hausdorff(const SymbolicPretop& x) {
  const GroundSchema& g = *x.schema();
  const auto& rules = x.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = i; j < rules.size(); ++j) {
      const Rule& ri = rules[i];
      const Rule& rj = rules[j];
      const bool same = ri.strand == rj.strand;
      const int self_arity = g.arity(ri.strand);
      if (same && self_arity == 0) continue;
      for (const Piece& t1 : ri.tmpl) {
        for (const Piece& t2 : rj.tmpl) {
          if (t1.strand != t2.strand) continue;
          const int arity = g.arity(t1.strand);
          std::array<std::vector<Lin>, 2> cs;
          bool dead = false;
          for (int a = 0; a < arity && !dead; ++a) {
            std::vector<Lin> lo = t1.axes[a].lo, hi = t1.axes[a].hi;
            for (const Lin& l : t2.axes[a].lo) lo.push_back(as_other(l));
            for (const Lin& l : t2.axes[a].hi) hi.push_back(as_other(l));
            std::vector<AxisLin> raw;
            pair_bounds(lo, hi, a, g.axis(t1.strand, a).min(), raw);
            for (const AxisLin& c : raw) {
              std::optional<Lin> l = forall_q(c.lin);
              if (!l) {
                dead = true;
                break;
              }
              cs[a].push_back(*l);
            }
          }
          if (dead) continue;
          for (const auto& bi : interval_boxes(ri.pattern, g.arity(ri.strand))) {
            for (const auto& bj : interval_boxes(rj.pattern, g.arity(rj.strand))) {
              std::array<std::vector<Lin>, 2> all = cs;
              for (int a = 0; a < g.arity(ri.strand); ++a) {
                if (bi[a].lo != kNegInf) all[a].push_back({-bi[a].lo, 1, 0, 0, 0});
                if (bi[a].hi != kPosInf) all[a].push_back({bi[a].hi, -1, 0, 0, 0});
              }
              for (int a = 0; a < g.arity(rj.strand); ++a) {
                if (bj[a].lo != kNegInf) all[a].push_back({-bj[a].lo, 0, 1, 0, 0});
                if (bj[a].hi != kPosInf) all[a].push_back({bj[a].hi, 0, -1, 0, 0});
              }
              auto ok = [&](const std::array<std::vector<Lin>, 2>& sys) {
                return feasible_pair(sys[0]) && feasible_pair(sys[1]);
              };
              bool found = false;
              if (!same) {
                found = ok(all);
              } else {
                for (int a = 0; a < self_arity && !found; ++a) {
                  for (int sign : {1, -1}) {
                    auto branch = all;
                    branch[a].push_back({-1, sign, -sign, 0, 0});
                    if (ok(branch)) {
                      found = true;
                      break;
                    }
                  }
                }
              }
              if (found) return {false, std::pair{x.rule_label(i), x.rule_label(j)}};
            }
          }
        }
      }
    }
  }
  return {};
}

Truncation truncate(const SymbolicPretop& x, Coord w) {
  const Coord need = x.constant_radius() + 2;
  if (w < need) {
    fail(ErrorKind::WindowTooSmall, "window " + std::to_string(w) + " below " + std::to_string(need));
  }
  const GroundSchema& g = *x.schema();
  auto span = [&](const Axis& ax) {
    return IntervalSet::range(ax, ax.kind == Axis::Kind::naturals ? ax.start : -w, w);
  };
  DefSet window = DefSet::empty(x.schema());
  Truncation out;
  for (StrandRef s : g.strands()) {
    switch (s.kind) {
      case StrandKind::atom:
        window = window.unite(DefSet::atom(x.schema(), s.index));
        break;
      case StrandKind::ray:
        window = window.unite(DefSet::ray(x.schema(), s.index, span(g.axis(s, 0))));
        break;
      case StrandKind::grid:
        window = window.unite(
            DefSet::grid(x.schema(), s.index, span(g.axis(s, 0)), span(g.axis(s, 1))));
        break;
    }
  }
  window = window.intersect(x.carrier());
  for (StrandRef s : g.strands()) {
    const int arity = g.arity(s);
    if (arity == 0) {
      Point p{s, 0, 0};
      if (window.contains(p)) out.points.push_back(p);
      continue;
    }
    const IntervalSet rows = span(g.axis(s, 0));
    for (Coord a = rows.intervals()[0].lo; a <= w; ++a) {
      if (arity == 1) {
        Point p{s, a, 0};
        if (window.contains(p)) out.points.push_back(p);
        continue;
      }
      const IntervalSet cols = span(g.axis(s, 1));
      for (Coord b = cols.intervals()[0].lo; b <= w; ++b) {
        Point p{s, a, b};
        if (window.contains(p)) out.points.push_back(p);
      }
    }
  }
  if (out.points.size() > 64) {
    fail(ErrorKind::SizeLimit, "window holds " + std::to_string(out.points.size()) + " points, limit 64");
  }
  std::vector<std::string> names;
  std::vector<Subset> vics;
  for (const Point& p : out.points) {
    names.push_back(print_point(g, p));
    const DefSet v = x.vicinity(p, w).intersect(window);
    Subset m;
    for (std::size_t i = 0; i < out.points.size(); ++i) {
      if (v.contains(out.points[i])) m = m | Subset::single(static_cast<int>(i));
    }
    vics.push_back(m);
  }
  out.space = FinitePretop::validate(std::move(names), std::move(vics));
  return out;
}

SymbolicPretop from_finite(const FinitePretop& x) {
  auto schema = std::make_shared<const GroundSchema>(x.names(), std::vector<RayDecl>{},
                                                     std::vector<GridDecl>{});
  std::vector<Rule> rules;
  for (int p = 0; p < x.size(); ++p) {
    Rule r{StrandRef{StrandKind::atom, static_cast<std::size_t>(p)}, {}, {}};
    for (int q : x.min_vicinity(p).elements()) {
      r.tmpl.push_back({StrandRef{StrandKind::atom, static_cast<std::size_t>(q)}, {}, {}});
    }
    rules.push_back(std::move(r));
  }
  return SymbolicPretop::build(schema, std::move(rules));
}

namespace {

const Lin kSelf{0, 1, 0, 0, 0};

Piece self_piece(StrandRef s, int arity) {
  Piece p{s, {}, {}};
  for (int a = 0; a < arity; ++a) p.axes[a] = {{kSelf}, {kSelf}};
  return p;
}

Piece atom_piece(std::size_t i) { return {StrandRef{StrandKind::atom, i}, {}, {}}; }

}  // namespace

SymbolicPretop urysohn() {
  const Axis rows = Axis::naturals(1), cols = Axis::integers();
  auto schema = std::make_shared<const GroundSchema>(
      std::vector<std::string>{"pinf", "minf"}, std::vector<RayDecl>{},
      std::vector<GridDecl>{{"G", rows, cols}});
  const StrandRef grid{StrandKind::grid, 0};
  const Lin tail_lo{1, 0, 0, 1, 0};     // k+1
  const Lin tail_hi{-1, 0, 0, -1, 0};   // -k-1
  std::vector<Rule> rules;
  rules.push_back({StrandRef{StrandKind::atom, 0}, {}, {atom_piece(0), Piece{grid, {AxisBounds{{tail_lo}, {}}, AxisBounds{{Lin::constant(1)}, {}}}, {}}}});
  rules.push_back({StrandRef{StrandKind::atom, 1}, {}, {atom_piece(1), Piece{grid, {AxisBounds{{tail_lo}, {}}, AxisBounds{{}, {Lin::constant(-1)}}}, {}}}});
  rules.push_back({grid,
                   {IntervalSet::full(rows), IntervalSet::make(cols, {{kNegInf, -1}, {1, kPosInf}})},
                   {self_piece(grid, 2)}});
  rules.push_back({grid,
                   {IntervalSet::full(rows), IntervalSet::point(cols, 0)},
                   {self_piece(grid, 2),
                    Piece{grid, {AxisBounds{{kSelf}, {kSelf}}, AxisBounds{{tail_lo}, {}}}, {}},
                    Piece{grid, {AxisBounds{{kSelf}, {kSelf}}, AxisBounds{{}, {tail_hi}}}, {}}}});
  return SymbolicPretop::build(schema, std::move(rules));
}

SymbolicPretop half_grid() {
  const Axis rows = Axis::naturals(1), cols = Axis::naturals(0);
  auto schema = std::make_shared<const GroundSchema>(
      std::vector<std::string>{"pinf"}, std::vector<RayDecl>{}, std::vector<GridDecl>{{"G", rows, cols}});
  const StrandRef grid{StrandKind::grid, 0};
  const Lin tail_lo{1, 0, 0, 1, 0};
  std::vector<Rule> rules;
  rules.push_back({StrandRef{StrandKind::atom, 0}, {}, {atom_piece(0), Piece{grid, {AxisBounds{{tail_lo}, {}}, AxisBounds{{Lin::constant(1)}, {}}}, {}}}});
  rules.push_back({grid, {IntervalSet::full(rows), IntervalSet::range(cols, 1, kPosInf)}, {self_piece(grid, 2)}});
  rules.push_back({grid,
                   {IntervalSet::full(rows), IntervalSet::point(cols, 0)},
                   {self_piece(grid, 2),
                    Piece{grid, {AxisBounds{{kSelf}, {kSelf}}, AxisBounds{{tail_lo}, {}}}, {}}}});
  return SymbolicPretop::build(schema, std::move(rules));
}

SymbolicPretop discrete_ray(int copies) {
  if (copies < 1 || copies > 16) fail(ErrorKind::UnknownBuiltin, "discrete_ray needs 1..16 copies");
  std::vector<RayDecl> rays;
  for (int i = 0; i < copies; ++i) rays.push_back({"R" + std::to_string(i), Axis::naturals(0)});
  auto schema = std::make_shared<const GroundSchema>(std::vector<std::string>{}, rays, std::vector<GridDecl>{});
  std::vector<Rule> rules;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const StrandRef s{StrandKind::ray, i};
    rules.push_back({s, {IntervalSet::full(rays[i].axis), IntervalSet()}, {self_piece(s, 1)}});
  }
  return SymbolicPretop::build(schema, std::move(rules));
}

SymbolicPretop builtin(const std::string& name, int param) {
  std::string base = name;
  if (auto open = name.find('('); open != std::string::npos && name.back() == ')') {
    base = name.substr(0, open);
    const std::string arg = name.substr(open + 1, name.size() - open - 2);
    char* end = nullptr;
    const long v = std::strtol(arg.c_str(), &end, 10);
    if (arg.empty() || *end != '\0') fail(ErrorKind::UnknownBuiltin, name);
    param = static_cast<int>(v);
  }
  if (base == "urysohn") return urysohn();
  if (base == "half_grid") return half_grid();
  if (base == "discrete_ray") return discrete_ray(param);
  fail(ErrorKind::UnknownBuiltin, name);
}

}  // namespace pretop::sym
