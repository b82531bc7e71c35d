#include "pretop/def_set.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pretop/errors.hpp"

namespace pretop {

GroundSchema::GroundSchema(std::vector<std::string> atoms, std::vector<RayDecl> rays,
                           std::vector<GridDecl> grids)
    : atoms_(std::move(atoms)), rays_(std::move(rays)), grids_(std::move(grids)) {
  std::set<std::string> seen;
  auto claim = [&](const std::string& n) {
    if (n.empty() || !seen.insert(n).second) {
      fail(ErrorKind::SchemaMismatch, "duplicate or empty strand name '" + n + "'");
    }
  };
  for (const auto& a : atoms_) claim(a);
  for (const auto& r : rays_) claim(r.name);
  for (const auto& g : grids_) claim(g.name);
}

std::optional<StrandRef> GroundSchema::find(const std::string& name) const {
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    if (atoms_[i] == name) return StrandRef{StrandKind::atom, i};
  for (std::size_t i = 0; i < rays_.size(); ++i)
    if (rays_[i].name == name) return StrandRef{StrandKind::ray, i};
  for (std::size_t i = 0; i < grids_.size(); ++i)
    if (grids_[i].name == name) return StrandRef{StrandKind::grid, i};
  return std::nullopt;
}

const std::string& GroundSchema::name(StrandRef s) const {
  switch (s.kind) {
    case StrandKind::atom: return atoms_.at(s.index);
    case StrandKind::ray: return rays_.at(s.index).name;
    case StrandKind::grid: return grids_.at(s.index).name;
  }
  return atoms_.at(s.index);
}

std::vector<StrandRef> GroundSchema::strands() const {
  std::vector<StrandRef> out;
  for (std::size_t i = 0; i < atoms_.size(); ++i) out.push_back({StrandKind::atom, i});
  for (std::size_t i = 0; i < rays_.size(); ++i) out.push_back({StrandKind::ray, i});
  for (std::size_t i = 0; i < grids_.size(); ++i) out.push_back({StrandKind::grid, i});
  return out;
}

int GroundSchema::arity(StrandRef s) const {
  return s.kind == StrandKind::atom ? 0 : s.kind == StrandKind::ray ? 1 : 2;
}

const Axis& GroundSchema::axis(StrandRef s, int which) const {
  if (s.kind == StrandKind::ray) return rays_.at(s.index).axis;
  if (s.kind == StrandKind::grid) {
    return which == 0 ? grids_.at(s.index).rows : grids_.at(s.index).cols;
  }
  fail(ErrorKind::SchemaMismatch, "atoms carry no coordinates");
}

bool same_schema(const SchemaPtr& a, const SchemaPtr& b) {
  if (a == b) return true;
  return a && b && *a == *b;
}

std::vector<Rect> canonical_rects(const Axis& rows, const Axis& cols, std::vector<Rect> rects) {
  std::vector<Coord> cuts;
  for (const Rect& r : rects) {
    if (r.rows.empty() || r.cols.empty()) continue;
    for (const Interval& iv : r.rows.intervals()) {
      if (is_finite(iv.lo)) cuts.push_back(iv.lo);
      if (is_finite(iv.hi)) cuts.push_back(iv.hi + 1);
    }
  }
  if (is_finite(rows.min())) cuts.push_back(rows.min());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  // Elementary row segments: (-inf, c0-1], [c0, c1-1], ..., [c_last, +inf).
  std::vector<Interval> segments;
  if (cuts.empty()) {
    segments.push_back({rows.min(), kPosInf});
  } else {
    if (rows.has_minus_side()) segments.push_back({kNegInf, cuts.front() - 1});
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) segments.push_back({cuts[i], cuts[i + 1] - 1});
    segments.push_back({cuts.back(), kPosInf});
  }

  std::map<IntervalSet, std::vector<Interval>> by_cols;
  for (const Interval& seg : segments) {
    if (seg.hi < rows.min()) continue;
    Coord probe = is_finite(seg.lo) ? std::max(seg.lo, rows.min()) : seg.hi;
    if (probe == kNegInf) probe = 0;  // only reachable when there are no cuts at all
    IntervalSet colset(cols);
    for (const Rect& r : rects) {
      if (!r.cols.empty() && r.rows.contains(probe)) colset = colset.unite(r.cols);
    }
    if (!colset.empty()) by_cols[colset].push_back(seg);
  }

  std::vector<Rect> out;
  for (auto& [colset, segs] : by_cols) {
    out.push_back({IntervalSet::make(rows, segs), colset});
  }
  std::sort(out.begin(), out.end(), [](const Rect& a, const Rect& b) { return a.rows < b.rows; });
  return out;
}

DefSet::DefSet(SchemaPtr schema) : schema_(std::move(schema)) {
  if (!schema_) fail(ErrorKind::SchemaMismatch, "null schema");
  atoms_.assign(schema_->atoms().size(), false);
  for (const auto& r : schema_->rays()) rays_.emplace_back(r.axis);
  grids_.resize(schema_->grids().size());
}

DefSet DefSet::empty(SchemaPtr schema) { return DefSet(std::move(schema)); }

DefSet DefSet::full(SchemaPtr schema) { return empty(std::move(schema)).complement(); }

DefSet DefSet::atom(SchemaPtr schema, std::size_t index) {
  DefSet s(std::move(schema));
  s.atoms_.at(index) = true;
  return s;
}

DefSet DefSet::ray(SchemaPtr schema, std::size_t index, IntervalSet sel) {
  DefSet s(std::move(schema));
  if (!(sel.axis() == s.schema_->rays().at(index).axis)) {
    fail(ErrorKind::AxisMismatch, "ray selector axis");
  }
  s.rays_.at(index) = std::move(sel);
  return s;
}

DefSet DefSet::grid(SchemaPtr schema, std::size_t index, IntervalSet rows, IntervalSet cols) {
  std::vector<Rect> rects;
  rects.push_back({std::move(rows), std::move(cols)});
  return grid_union(std::move(schema), index, std::move(rects));
}

DefSet DefSet::grid_union(SchemaPtr schema, std::size_t index, std::vector<Rect> rects) {
  DefSet s(std::move(schema));
  const GridDecl& g = s.schema_->grids().at(index);
  for (const Rect& r : rects) {
    if (!(r.rows.axis() == g.rows) || !(r.cols.axis() == g.cols)) {
      fail(ErrorKind::AxisMismatch, "grid rectangle axes for '" + g.name + "'");
    }
  }
  s.grids_.at(index) = canonical_rects(g.rows, g.cols, std::move(rects));
  return s;
}

DefSet DefSet::point(SchemaPtr schema, const Point& p) {
  DefSet probe(schema);
  (void)probe.contains(p);  // validates coordinates
  switch (p.strand.kind) {
    case StrandKind::atom: return atom(std::move(schema), p.strand.index);
    case StrandKind::ray: {
      Axis ax = schema->rays().at(p.strand.index).axis;
      return ray(std::move(schema), p.strand.index, IntervalSet::point(ax, p.a));
    }
    case StrandKind::grid: {
      const GridDecl& g = schema->grids().at(p.strand.index);
      return grid(schema, p.strand.index, IntervalSet::point(g.rows, p.a),
                  IntervalSet::point(g.cols, p.b));
    }
  }
  return probe;
}

DefSet DefSet::strand(SchemaPtr schema, StrandRef st) {
  switch (st.kind) {
    case StrandKind::atom: return atom(std::move(schema), st.index);
    case StrandKind::ray: {
      Axis ax = schema->rays().at(st.index).axis;
      return ray(std::move(schema), st.index, IntervalSet::full(ax));
    }
    case StrandKind::grid: {
      const GridDecl& g = schema->grids().at(st.index);
      return grid(schema, st.index, IntervalSet::full(g.rows), IntervalSet::full(g.cols));
    }
  }
  return empty(std::move(schema));
}

void DefSet::check_schema(const DefSet& other) const {
  if (!same_schema(schema_, other.schema_)) fail(ErrorKind::SchemaMismatch, "operands on different schemas");
}

DefSet DefSet::unite(const DefSet& other) const {
  check_schema(other);
  DefSet out(schema_);
  for (std::size_t i = 0; i < atoms_.size(); ++i) out.atoms_[i] = atoms_[i] || other.atoms_[i];
  for (std::size_t i = 0; i < rays_.size(); ++i) out.rays_[i] = rays_[i].unite(other.rays_[i]);
  for (std::size_t i = 0; i < grids_.size(); ++i) {
    std::vector<Rect> rects = grids_[i];
    rects.insert(rects.end(), other.grids_[i].begin(), other.grids_[i].end());
    const GridDecl& g = schema_->grids()[i];
    out.grids_[i] = canonical_rects(g.rows, g.cols, std::move(rects));
  }
  return out;
}

DefSet DefSet::intersect(const DefSet& other) const {
  check_schema(other);
  DefSet out(schema_);
  for (std::size_t i = 0; i < atoms_.size(); ++i) out.atoms_[i] = atoms_[i] && other.atoms_[i];
  for (std::size_t i = 0; i < rays_.size(); ++i) out.rays_[i] = rays_[i].intersect(other.rays_[i]);
  for (std::size_t i = 0; i < grids_.size(); ++i) {
    std::vector<Rect> rects;
    for (const Rect& a : grids_[i]) {
      for (const Rect& b : other.grids_[i]) {
        Rect r{a.rows.intersect(b.rows), a.cols.intersect(b.cols)};
        if (!r.rows.empty() && !r.cols.empty()) rects.push_back(std::move(r));
      }
    }
    const GridDecl& g = schema_->grids()[i];
    out.grids_[i] = canonical_rects(g.rows, g.cols, std::move(rects));
  }
  return out;
}

DefSet DefSet::complement() const {
  DefSet out(schema_);
  for (std::size_t i = 0; i < atoms_.size(); ++i) out.atoms_[i] = !atoms_[i];
  for (std::size_t i = 0; i < rays_.size(); ++i) out.rays_[i] = rays_[i].complement();
  for (std::size_t i = 0; i < grids_.size(); ++i) {
    const GridDecl& g = schema_->grids()[i];
    // Canonical rows are disjoint, so (⋃ S_j×T_j)ᶜ = (⋃ S_j)ᶜ×full ∪ ⋃ S_j×T_jᶜ.
    IntervalSet covered(g.rows);
    std::vector<Rect> rects;
    for (const Rect& r : grids_[i]) {
      covered = covered.unite(r.rows);
      rects.push_back({r.rows, r.cols.complement()});
    }
    rects.push_back({covered.complement(), IntervalSet::full(g.cols)});
    out.grids_[i] = canonical_rects(g.rows, g.cols, std::move(rects));
  }
  return out;
}

DefSet DefSet::difference(const DefSet& other) const {
  check_schema(other);
  return intersect(other.complement());
}

bool DefSet::contains(const Point& p) const {
  const GroundSchema& sc = *schema_;
  switch (p.strand.kind) {
    case StrandKind::atom:
      if (p.strand.index >= sc.atoms().size()) break;
      return atoms_[p.strand.index];
    case StrandKind::ray: {
      if (p.strand.index >= sc.rays().size()) break;
      if (p.a < sc.rays()[p.strand.index].axis.min()) break;
      return rays_[p.strand.index].contains(p.a);
    }
    case StrandKind::grid: {
      if (p.strand.index >= sc.grids().size()) break;
      const GridDecl& g = sc.grids()[p.strand.index];
      if (p.a < g.rows.min() || p.b < g.cols.min()) break;
      for (const Rect& r : grids_[p.strand.index]) {
        if (r.rows.contains(p.a)) return r.cols.contains(p.b);
      }
      return false;
    }
  }
  fail(ErrorKind::UnknownPoint, "point outside the schema domains");
}

bool DefSet::is_empty() const noexcept {
  for (bool a : atoms_) if (a) return false;
  for (const auto& r : rays_) if (!r.empty()) return false;
  for (const auto& g : grids_) if (!g.empty()) return false;
  return true;
}

bool DefSet::is_finite() const { return cardinality().has_value(); }

std::optional<std::uint64_t> DefSet::cardinality() const {
  std::uint64_t n = 0;
  for (bool a : atoms_) n += a ? 1 : 0;
  for (const auto& r : rays_) {
    Classification c = r.classify();
    if (!c.is_finite) return std::nullopt;
    n += c.cardinality;
  }
  for (const auto& g : grids_) {
    for (const Rect& r : g) {
      Classification cr = r.rows.classify();
      Classification cc = r.cols.classify();
      if (!cr.is_finite || !cc.is_finite) return std::nullopt;
      n += cr.cardinality * cc.cardinality;
    }
  }
  return n;
}

std::optional<Point> DefSet::least_point() const {
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    if (atoms_[i]) return Point{{StrandKind::atom, i}, 0, 0};
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (rays_[i].empty()) continue;
    if (auto lo = rays_[i].least()) return Point{{StrandKind::ray, i}, *lo, 0};
    return std::nullopt;
  }
  for (std::size_t i = 0; i < grids_.size(); ++i) {
    if (grids_[i].empty()) continue;
    const Rect& first = grids_[i].front();  // rows are disjoint and sorted
    auto row = first.rows.least();
    auto col = first.cols.least();
    if (!row || !col) return std::nullopt;
    return Point{{StrandKind::grid, i}, *row, *col};
  }
  return std::nullopt;
}

Coord DefSet::finite_radius() const noexcept {
  Coord r = 0;
  for (const auto& s : rays_) r = std::max(r, s.finite_radius());
  for (const auto& g : grids_) {
    for (const Rect& rect : g) r = std::max({r, rect.rows.finite_radius(), rect.cols.finite_radius()});
  }
  return r;
}

bool operator==(const DefSet& a, const DefSet& b) {
  return same_schema(a.schema_, b.schema_) && a.atoms_ == b.atoms_ && a.rays_ == b.rays_ &&
         a.grids_ == b.grids_;
}

DefSet canonicalize(const DefSet& s) {
  DefSet out = DefSet::empty(s.schema());
  const GroundSchema& sc = *s.schema();
  for (std::size_t i = 0; i < sc.atoms().size(); ++i)
    if (s.has_atom(i)) out = out.unite(DefSet::atom(s.schema(), i));
  for (std::size_t i = 0; i < sc.rays().size(); ++i)
    out = out.unite(DefSet::ray(s.schema(), i, s.ray_set(i)));
  for (std::size_t i = 0; i < sc.grids().size(); ++i)
    out = out.unite(DefSet::grid_union(s.schema(), i, s.grid_rects(i)));
  return out;
}

DefSet def_bool_op(BoolOp op, const DefSet& lhs, const DefSet* rhs) {
  if (op == BoolOp::complement) return lhs.complement();
  if (rhs == nullptr) fail(ErrorKind::SchemaMismatch, "binary operation without right operand");
  switch (op) {
    case BoolOp::unite: return lhs.unite(*rhs);
    case BoolOp::intersect: return lhs.intersect(*rhs);
    case BoolOp::difference: return lhs.difference(*rhs);
    case BoolOp::complement: break;
  }
  return lhs.complement();
}

}  // namespace pretop
