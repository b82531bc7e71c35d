#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pretop/interval_set.hpp"

namespace pretop {

struct RayDecl {
  std::string name;
  Axis axis = Axis::naturals(0);

  friend bool operator==(const RayDecl&, const RayDecl&) = default;
};

struct GridDecl {
  std::string name;
  Axis rows = Axis::naturals(0);
  Axis cols = Axis::integers();

  friend bool operator==(const GridDecl&, const GridDecl&) = default;
};

enum class StrandKind { atom = 0, ray = 1, grid = 2 };

struct StrandRef {
  StrandKind kind = StrandKind::atom;
  std::size_t index = 0;

  friend auto operator<=>(const StrandRef&, const StrandRef&) = default;
};

/// Countable ground set: named atoms, rays (one axis) and grids (two axes).
/// Names are unique across all strands.
class GroundSchema {
 public:
  GroundSchema() = default;
  GroundSchema(std::vector<std::string> atoms, std::vector<RayDecl> rays,
               std::vector<GridDecl> grids);

  const std::vector<std::string>& atoms() const noexcept { return atoms_; }
  const std::vector<RayDecl>& rays() const noexcept { return rays_; }
  const std::vector<GridDecl>& grids() const noexcept { return grids_; }

  std::optional<StrandRef> find(const std::string& name) const;
  const std::string& name(StrandRef s) const;
  std::vector<StrandRef> strands() const;
  /// Number of coordinates a point of the strand carries (0, 1 or 2).
  int arity(StrandRef s) const;
  const Axis& axis(StrandRef s, int which) const;

  friend bool operator==(const GroundSchema&, const GroundSchema&) = default;

 private:
  std::vector<std::string> atoms_;
  std::vector<RayDecl> rays_;
  std::vector<GridDecl> grids_;
};

using SchemaPtr = std::shared_ptr<const GroundSchema>;

/// A point of the ground set. Ray points use `a` as their index; grid points
/// use (`a`, `b`) = (row, col). The defaulted ordering is the canonical point
/// order used for least-witness selection.
struct Point {
  StrandRef strand;
  Coord a = 0;
  Coord b = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

struct Rect {
  IntervalSet rows;
  IntervalSet cols;

  friend bool operator==(const Rect&, const Rect&) = default;
};

/// Definable subset of a ground schema: a choice of atoms, an IntervalSet per
/// ray, and a finite union of rectangles per grid. Grid parts are always held
/// in canonical form: pairwise-disjoint row selectors, one rectangle per
/// distinct column set, no empty rectangles, ordered by rows. Semantic
/// equality therefore coincides with operator==.
class DefSet {
 public:
  DefSet() = default;

  static DefSet empty(SchemaPtr schema);
  static DefSet full(SchemaPtr schema);
  static DefSet atom(SchemaPtr schema, std::size_t index);
  static DefSet ray(SchemaPtr schema, std::size_t index, IntervalSet sel);
  static DefSet grid(SchemaPtr schema, std::size_t index, IntervalSet rows, IntervalSet cols);
  /// Canonicalizes an arbitrary list of rectangles on one grid.
  static DefSet grid_union(SchemaPtr schema, std::size_t index, std::vector<Rect> rects);
  static DefSet point(SchemaPtr schema, const Point& p);
  /// The whole strand (atom, ray or grid).
  static DefSet strand(SchemaPtr schema, StrandRef s);

  const SchemaPtr& schema() const noexcept { return schema_; }
  bool has_atom(std::size_t i) const { return atoms_.at(i); }
  const IntervalSet& ray_set(std::size_t i) const { return rays_.at(i); }
  const std::vector<Rect>& grid_rects(std::size_t i) const { return grids_.at(i); }

  DefSet unite(const DefSet& other) const;
  DefSet intersect(const DefSet& other) const;
  DefSet difference(const DefSet& other) const;
  DefSet complement() const;

  /// Throws UnknownPoint when the point lies outside the schema's domains.
  bool contains(const Point& p) const;
  bool is_empty() const noexcept;
  bool meets(const DefSet& other) const { return !intersect(other).is_empty(); }
  bool includes(const DefSet& other) const { return other.difference(*this).is_empty(); }
  bool is_finite() const;
  /// Number of points, if finite.
  std::optional<std::uint64_t> cardinality() const;
  /// Least point in canonical point order, if one exists (a set unbounded
  /// below on an integer axis may have none).
  std::optional<Point> least_point() const;
  /// Largest absolute finite endpoint across all selectors.
  Coord finite_radius() const noexcept;

  friend bool operator==(const DefSet& a, const DefSet& b);

 private:
  explicit DefSet(SchemaPtr schema);
  void check_schema(const DefSet& other) const;

  SchemaPtr schema_;
  std::vector<bool> atoms_;
  std::vector<IntervalSet> rays_;
  std::vector<std::vector<Rect>> grids_;
};

enum class SetQuery { membership, is_empty, meets, is_finite };

/// Canonical form of a rectangle list: row-breakpoint refinement followed by
/// grouping of equal column sets. Idempotent.
std::vector<Rect> canonical_rects(const Axis& rows, const Axis& cols, std::vector<Rect> rects);

/// DefSets are kept canonical on construction; this re-derives the canonical
/// form from scratch and is the identity on every valid DefSet.
DefSet canonicalize(const DefSet& s);

DefSet def_bool_op(BoolOp op, const DefSet& lhs, const DefSet* rhs = nullptr);

/// True when both pointers name equal schemas.
bool same_schema(const SchemaPtr& a, const SchemaPtr& b);

}  // namespace pretop
