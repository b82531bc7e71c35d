#include "pretop/symbolic_map.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "pretop/errors.hpp"
#include "pretop/set_literal.hpp"

namespace pretop::sym {

StrandMap StrandMap::to_point(std::string source, Point p) {
  StrandMap m;
  m.source = std::move(source);
  m.constant = p;
  return m;
}

StrandMap StrandMap::affine(std::string source, std::string target, std::array<Coord, 2> scale,
                            std::array<Coord, 2> shift) {
  StrandMap m;
  m.source = std::move(source);
  m.target = std::move(target);
  m.scale = scale;
  m.shift = shift;
  return m;
}

namespace {

IntervalSet pre_axis(const IntervalSet& sel, const Axis& axis, Coord scale, Coord shift) {
  std::vector<Interval> raw;
  for (const Interval& iv : sel.intervals()) {
    const Coord lo = iv.lo == kNegInf ? kNegInf : ceil_div(iv.lo - shift, scale);
    const Coord hi = iv.hi == kPosInf ? kPosInf : floor_div(iv.hi - shift, scale);
    if (lo <= hi) raw.push_back({lo, hi});
  }
  return IntervalSet::make(axis, raw);
}

DefSet strand_part(const DefSet& s, StrandRef r) {
  return s.intersect(DefSet::strand(s.schema(), r));
}

std::size_t position(const GroundSchema& g, StrandRef s) {
  const auto all = g.strands();
  return static_cast<std::size_t>(std::find(all.begin(), all.end(), s) - all.begin());
}

}  // namespace

SymMap SymMap::make(SymbolicPretop source, SymbolicPretop target, std::vector<StrandMap> strands) {
  const GroundSchema& gs = *source.schema();
  const GroundSchema& gt = *target.schema();
  SymMap f;
  f.slot_.assign(gs.strands().size(), -1);
  for (std::size_t i = 0; i < strands.size(); ++i) {
    const StrandMap& m = strands[i];
    const auto s = gs.find(m.source);
    if (!s) fail(ErrorKind::SchemaMismatch, "unknown source strand " + m.source);
    int& slot = f.slot_[position(gs, *s)];
    if (slot >= 0) fail(ErrorKind::SchemaMismatch, "strand " + m.source + " mapped twice");
    slot = static_cast<int>(i);
    if (m.constant) {
      if (!target.carrier().contains(*m.constant)) {
        fail(ErrorKind::UnknownPoint, "image of " + m.source + " leaves the target");
      }
      continue;
    }
    const auto t = gt.find(m.target);
    if (!t) fail(ErrorKind::SchemaMismatch, "unknown target strand " + m.target);
    if (gs.arity(*s) == 0 || gs.arity(*s) != gt.arity(*t)) {
      fail(ErrorKind::SchemaMismatch, m.source + " -> " + m.target + ": arity differs");
    }
    for (int a = 0; a < gs.arity(*s); ++a) {
      if (m.scale[a] < 1) fail(ErrorKind::FragmentEscape, "non-positive scale on " + m.source);
    }
  }
  f.source_ = std::move(source);
  f.target_ = std::move(target);
  f.strands_ = std::move(strands);
  for (StrandRef s : gs.strands()) {
    if (strand_part(f.source_.carrier(), s).is_empty()) continue;
    if (f.slot_[position(gs, s)] < 0) fail(ErrorKind::SchemaMismatch, "no image for strand " + gs.name(s));
  }
  const DefSet back = f.preimage(f.target_.carrier());
  if (!back.includes(f.source_.carrier())) {
    const auto p = f.source_.carrier().difference(back).least_point();
    fail(ErrorKind::UnknownPoint, "image of " + (p ? print_point(gs, *p) : std::string("a point")) +
                                      " leaves the target");
  }
  return f;
}

const StrandMap* SymMap::entry(StrandRef s) const {
  const int i = slot_.at(position(*source_.schema(), s));
  return i < 0 ? nullptr : &strands_[i];
}

Point SymMap::apply(const Point& p) const {
  if (!source_.carrier().contains(p)) fail(ErrorKind::UnknownPoint, print_point(*source_.schema(), p));
  const StrandMap& m = *entry(p.strand);
  if (m.constant) return *m.constant;
  return {*target_.schema()->find(m.target), m.scale[0] * p.a + m.shift[0], m.scale[1] * p.b + m.shift[1]};
}

DefSet SymMap::preimage(const DefSet& t) const {
  if (!same_schema(t.schema(), target_.schema())) fail(ErrorKind::SchemaMismatch, "set on another schema");
  const SchemaPtr& ps = source_.schema();
  const GroundSchema& gs = *ps;
  DefSet out = DefSet::empty(ps);
  for (StrandRef s : gs.strands()) {
    const StrandMap* m = entry(s);
    if (!m) continue;
    if (m->constant) {
      if (t.contains(*m->constant)) out = out.unite(DefSet::strand(ps, s));
      continue;
    }
    const StrandRef ts = *target_.schema()->find(m->target);
    if (gs.arity(s) == 1) {
      out = out.unite(DefSet::ray(ps, s.index, pre_axis(t.ray_set(ts.index), gs.axis(s, 0), m->scale[0], m->shift[0])));
      continue;
    }
    std::vector<Rect> rects;
    for (const Rect& r : t.grid_rects(ts.index)) {
      rects.push_back({pre_axis(r.rows, gs.axis(s, 0), m->scale[0], m->shift[0]),
                       pre_axis(r.cols, gs.axis(s, 1), m->scale[1], m->shift[1])});
    }
    out = out.unite(DefSet::grid_union(ps, s.index, std::move(rects)));
  }
  return out.intersect(source_.carrier());
}

namespace {

std::string coord_map(const char* v, Coord scale, Coord shift) {
  std::string s = scale == 1 ? v : std::to_string(scale) + v;
  if (shift > 0) s += "+" + std::to_string(shift);
  if (shift < 0) s += std::to_string(shift);
  return s;
}

}  // namespace

std::string SymMap::describe() const {
  std::ostringstream os;
  const GroundSchema& gs = *source_.schema();
  for (const StrandMap& m : strands_) {
    os << m.source << " -> ";
    if (m.constant) {
      os << print_point(*target_.schema(), *m.constant) << "\n";
      continue;
    }
    os << m.target;
    const int arity = gs.arity(*gs.find(m.source));
    os << " (" << coord_map("n", m.scale[0], m.shift[0]);
    if (arity == 2) os << ", " << coord_map("m", m.scale[1], m.shift[1]);
    os << ")\n";
  }
  return os.str();
}

ImageTrace image_trace(const SymMap& f, const TraceClass& c, Coord a, Coord b) {
  const GroundSchema& gs = *f.source().schema();
  const StrandMap* m = f.entry(c.strand);
  if (!m) fail(ErrorKind::UnknownPoint, c.label(gs) + " misses the carrier");
  if (m->constant) return {TraceClass{m->constant->strand, {0, 0}}, m->constant->a, m->constant->b};
  const Coord v[2] = {a, b};
  ImageTrace out{TraceClass{*f.target().schema()->find(m->target), c.dir}, 0, 0};
  Coord* dst[2] = {&out.a, &out.b};
  for (int ax = 0; ax < 2; ++ax) {
    if (c.dir[ax] == 0) *dst[ax] = m->scale[ax] * v[ax] + m->shift[ax];
  }
  return out;
}

namespace {

Coord carrier_radius(const DefSet& s, StrandRef r) {
  return s.intersect(DefSet::strand(s.schema(), r)).finite_radius();
}

}  // namespace

// Beyond radius R every selector is constant on each side, so along an axis
// coverage is periodic with the lcm of the scales; [−R−L, R+L] sees every case.
bool sym_is_onto(const SymMap& f) {
  const GroundSchema& gs = *f.source().schema();
  const GroundSchema& gt = *f.target().schema();
  const DefSet& tc = f.target().carrier();
  constexpr std::uint64_t kWindowPoints = 1U << 20;
  for (StrandRef t : gt.strands()) {
    const DefSet part = tc.intersect(DefSet::strand(tc.schema(), t));
    if (part.is_empty()) continue;
    std::array<Coord, 2> radius{carrier_radius(tc, t), carrier_radius(tc, t)};
    std::array<Coord, 2> period{1, 1};
    std::vector<const StrandMap*> into;
    for (const StrandMap& m : f.strands()) {
      if (m.constant) continue;
      if (*gt.find(m.target) != t) continue;
      into.push_back(&m);
      const Coord rs = carrier_radius(f.source().carrier(), *gs.find(m.source));
      for (int a = 0; a < gt.arity(t); ++a) {
        radius[a] = std::max(radius[a], m.scale[a] * rs + std::abs(m.shift[a]));
        period[a] = std::lcm(period[a], m.scale[a]);
      }
    }
    auto covered = [&](const Point& y) {
      for (const StrandMap& m : f.strands()) {
        if (m.constant && *m.constant == y) return true;
      }
      for (const StrandMap* m : into) {
        const StrandRef s = *gs.find(m->source);
        Point x{s, 0, 0};
        const Coord yv[2] = {y.a, y.b};
        Coord* xv[2] = {&x.a, &x.b};
        bool hit = true;
        for (int a = 0; a < gt.arity(t) && hit; ++a) {
          const Coord d = yv[a] - m->shift[a];
          hit = d % m->scale[a] == 0;
          *xv[a] = d / std::max<Coord>(m->scale[a], 1);
          if (hit && gs.axis(s, a).min() != kNegInf && *xv[a] < gs.axis(s, a).min()) hit = false;
        }
        if (hit && f.source().carrier().contains(x)) return true;
      }
      return false;
    };
    const int arity = gt.arity(t);
    std::array<Coord, 2> lo{0, 0}, hi{0, 0};
    std::uint64_t count = 1;
    for (int a = 0; a < arity; ++a) {
      const Coord w = radius[a] + period[a] + 1;
      lo[a] = std::max(-w, gt.axis(t, a).min() == kNegInf ? -w : gt.axis(t, a).min());
      hi[a] = w;
      count *= static_cast<std::uint64_t>(hi[a] - lo[a] + 1);
    }
    if (count > kWindowPoints) fail(ErrorKind::SizeLimit, "onto check window too large");
    for (Coord a = lo[0]; a <= hi[0]; ++a) {
      for (Coord b = lo[1]; b <= hi[1]; ++b) {
        const Point y{t, a, b};
        if (part.contains(y) && !covered(y)) return false;
      }
    }
  }
  return true;
}

bool kernels_singleton(const SymbolicPretop& x) {
  const GroundSchema& g = *x.schema();
  auto shrinks = [](const AxisBounds& ax) {
    auto has_q = [](const Lin& l) { return l.q != 0; };
    return std::any_of(ax.lo.begin(), ax.lo.end(), has_q) || std::any_of(ax.hi.begin(), ax.hi.end(), has_q);
  };
  for (const Rule& r : x.rules()) {
    const int arity = g.arity(r.strand);
    for (const Piece& t : r.tmpl) {
      if (shrinks(t.axes[0]) || shrinks(t.axes[1])) continue;
      if (std::any_of(t.guards.begin(), t.guards.end(), [](const AxisLin& gd) { return gd.lin.q < 0; })) continue;
      if (t.strand != r.strand) return false;
      for (const auto& box : interval_boxes(r.pattern, arity)) {
        for (int a = 0; a < arity; ++a) {
          const Interval iv = box[a];
          const bool lo_ok = std::any_of(t.axes[a].lo.begin(), t.axes[a].lo.end(), [&](const Lin& l) {
            return l.z == 1 ? l.c >= 0 : (iv.hi != kPosInf && l.c >= iv.hi);
          });
          const bool hi_ok = std::any_of(t.axes[a].hi.begin(), t.axes[a].hi.end(), [&](const Lin& h) {
            return h.z == 1 ? h.c <= 0 : (iv.lo != kNegInf && h.c <= iv.lo);
          });
          if (!lo_ok || !hi_ok) return false;
        }
      }
    }
  }
  return true;
}

namespace {

// Parametric end sent to a constant y: no member may have a limit outside
// f⁻[lim⟨y⟩].
std::optional<std::string> constant_end_fails(const SymMap& f, const TraceClass& c, const DefSet& domain) {
  const SymbolicPretop& x = f.source();
  const Point y = *f.entry(c.strand)->constant;
  const DefSet ok = f.preimage(trace_limits_at(f.target(), TraceClass{y.strand, {0, 0}}, y.a, y.b));
  const DefSet bad = domain.intersect(limits_meeting(x, c, x.carrier().difference(ok)));
  if (bad.is_empty()) return std::nullopt;
  const std::optional<Point> least = bad.least_point();
  return least ? c.label_at(*x.schema(), *least) : c.label(*x.schema()) + " at " + print_set_literal(bad);
}

}  // namespace

SymContinuityReport sym_is_continuous(const SymMap& f) {
  const SymbolicPretop& x = f.source();
  const GroundSchema& g = *x.schema();
  std::vector<TraceClass> classes = point_classes(g);
  for (const TraceClass& e : ends(g)) classes.push_back(e);
  std::optional<bool> singleton;
  for (const TraceClass& c : classes) {
    const DefSet domain = trace_domain(x, c);
    if (domain.is_empty()) continue;
    SymContinuityReport fail_at{false, std::nullopt};
    if (c.params(g) == 0) {
      const ImageTrace it = image_trace(f, c);
      const DefSet lim = trace_limits_at(x, c);
      const DefSet lim_image = trace_limits_at(f.target(), it.cls, it.a, it.b);
      if (!f.preimage(lim_image).includes(lim)) {
        fail_at.witness = c.label(g);
        return fail_at;
      }
      continue;
    }
    if (!c.is_end()) {
      if (!singleton) singleton = kernels_singleton(x);
      if (!*singleton) fail(ErrorKind::UnclassifiableImageTrace, c.label(g) + ": principal limits beyond the point");
      continue;
    }
    if (!f.entry(c.strand)->constant) {
      fail(ErrorKind::UnclassifiableImageTrace, c.label(g) + ": parametric end under a coordinate map");
    }
    if (auto w = constant_end_fails(f, c, domain)) {
      fail_at.witness = *w;
      return fail_at;
    }
  }
  return {};
}

}  // namespace pretop::sym
