#include "pretop/end_extension.hpp"

#include <algorithm>

#include "pretop/errors.hpp"
#include "pretop/set_literal.hpp"

namespace pretop::sym {

namespace {

std::string coord_tag(int dir, Coord v) {
  if (dir > 0) return "p";
  if (dir < 0) return "m";
  return v < 0 ? "n" + std::to_string(-v) : std::to_string(v);
}

std::string end_name(const GroundSchema& g, const TraceClass& c, Coord a, Coord b) {
  std::string s = "w_" + g.name(c.strand);
  if (g.arity(c.strand) == 1) return c.dir[0] > 0 ? s : s + "_m";
  return s + "_" + coord_tag(c.dir[0], a) + "_" + coord_tag(c.dir[1], b);
}

std::string fresh(const GroundSchema& g, const std::vector<std::string>& taken, std::string name) {
  auto used = [&](const std::string& n) {
    return g.find(n).has_value() || std::find(taken.begin(), taken.end(), n) != taken.end();
  };
  while (used(name)) name += "_";
  return name;
}

Piece tail_piece(const GroundSchema& g, const AddedPoint::Member& m) {
  Piece p{m.cls.strand, {}, {}};
  const Coord v[2] = {m.a, m.b};
  for (int ax = 0; ax < g.arity(m.cls.strand); ++ax) {
    if (m.cls.dir[ax] > 0) {
      p.axes[ax].lo.push_back(Lin{0, 0, 0, 1, 0});
    } else if (m.cls.dir[ax] < 0) {
      p.axes[ax].hi.push_back(Lin{0, 0, 0, -1, 0});
    } else {
      p.axes[ax].lo.push_back(Lin::constant(v[ax]));
      p.axes[ax].hi.push_back(Lin::constant(v[ax]));
    }
  }
  return p;
}

// Members of ends whose trace lives in the carrier but has no limit there.
std::vector<AddedPoint::Member> failing_members(const SymbolicPretop& x) {
  const GroundSchema& g = *x.schema();
  std::vector<AddedPoint::Member> out;
  for (const TraceClass& c : ends(g)) {
    const DefSet bad = trace_domain(x, c).difference(end_converges(x, c).converging);
    if (bad.is_empty()) continue;
    if (c.params(g) == 0) {
      out.push_back({c, 0, 0});
      continue;
    }
    if (!bad.is_finite()) {
      fail(ErrorKind::FragmentEscape, c.label(g) + " fails at infinitely many parameters");
    }
    const IntervalSet& sel = bad.ray_set(0);
    for (const Interval& iv : sel.intervals()) {
      for (Coord v = iv.lo; v <= iv.hi; ++v) out.push_back({c, v, v});
    }
  }
  return out;
}

EndExtension assemble(const SymbolicPretop& x, std::vector<AddedPoint> added) {
  const GroundSchema& g = *x.schema();
  std::vector<std::string> atoms = g.atoms();
  for (const AddedPoint& p : added) atoms.push_back(p.name);
  auto schema = std::make_shared<const GroundSchema>(atoms, g.rays(), g.grids());
  std::vector<Rule> rules = x.rules();
  std::vector<Piece> carrier = boxes_of(x.carrier());
  for (std::size_t i = 0; i < added.size(); ++i) {
    const StrandRef self{StrandKind::atom, g.atoms().size() + i};
    Rule r{self, {}, {Piece{self, {}, {}}}};
    for (const AddedPoint::Member& m : added[i].members) r.tmpl.push_back(tail_piece(g, m));
    rules.push_back(std::move(r));
    carrier.push_back(Piece{self, {}, {}});
  }
  EndExtension e;
  e.base = x;
  e.space = SymbolicPretop::build(schema, std::move(rules), pieces_to_set(carrier, schema));
  e.added = std::move(added);
  e.compact = sym_is_compact(e.space).compact;
  e.hausdorff = sym_hausdorff(e.space);
  return e;
}

}  // namespace

DefSet EndExtension::embed(const DefSet& base_set) const {
  if (!same_schema(base_set.schema(), base.schema())) fail(ErrorKind::SchemaMismatch, "set outside the base");
  return pieces_to_set(boxes_of(base_set), space.schema());
}

std::optional<Point> EndExtension::added_for(const TraceClass& cls, Coord a, Coord b) const {
  const std::size_t first = base.schema()->atoms().size();
  for (std::size_t i = 0; i < added.size(); ++i) {
    for (const AddedPoint::Member& m : added[i].members) {
      if (m.cls != cls) continue;
      const bool same = (cls.dir[0] != 0 || m.a == a) && (cls.dir[1] != 0 || m.b == b);
      if (same) return Point{StrandRef{StrandKind::atom, first + i}, 0, 0};
    }
  }
  return std::nullopt;
}

EndExtension end_extension(const SymbolicPretop& x) {
  const GroundSchema& g = *x.schema();
  std::vector<AddedPoint> added;
  std::vector<std::string> taken;
  for (const AddedPoint::Member& m : failing_members(x)) {
    taken.push_back(fresh(g, taken, end_name(g, m.cls, m.a, m.b)));
    added.push_back({taken.back(), {m}});
  }
  return assemble(x, std::move(added));
}

EndExtension one_point_compactification(const SymbolicPretop& x) {
  std::vector<AddedPoint::Member> members = failing_members(x);
  std::vector<AddedPoint> added;
  if (!members.empty()) added.push_back({fresh(*x.schema(), {}, "w"), std::move(members)});
  return assemble(x, std::move(added));
}

KappaMap extend_map_kappa(const SymMap& f, const EndExtension& source, const EndExtension& target) {
  if (!(*source.base.schema() == *f.source().schema()) || !(*target.base.schema() == *f.target().schema())) {
    fail(ErrorKind::SchemaMismatch, "extensions are not over the map's spaces");
  }
  const GroundSchema& gy = *target.space.schema();
  std::vector<StrandMap> strands = f.strands();
  std::vector<std::pair<std::string, std::string>> assigned;
  for (const AddedPoint& p : source.added) {
    std::optional<Point> image;
    for (const AddedPoint::Member& m : p.members) {
      const ImageTrace it = image_trace(f, m.cls, m.a, m.b);
      std::optional<Point> here = trace_limits_at(f.target(), it.cls, it.a, it.b).least_point();
      if (!here) here = target.added_for(it.cls, it.a, it.b);
      if (!here) here = trace_limits_at(target.space, it.cls, it.a, it.b).least_point();
      if (!here) {
        fail(ErrorKind::UnclassifiableImageTrace, "no image for " + p.name);
      }
      if (!image || *here < *image) image = here;
    }
    strands.push_back(StrandMap::to_point(p.name, *image));
    assigned.emplace_back(p.name, print_point(gy, *image));
  }
  KappaMap out{SymMap::make(source.space, target.space, std::move(strands)), std::move(assigned), {}, false};
  out.continuity = sym_is_continuous(out.map);
  out.onto = sym_is_onto(out.map);
  return out;
}

}  // namespace pretop::sym
