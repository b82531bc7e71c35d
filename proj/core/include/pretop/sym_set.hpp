#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pretop/def_set.hpp"
#include "pretop/lin_expr.hpp"

namespace pretop::sym {

struct AxisBounds {
  std::vector<Lin> lo;  // empty: unbounded below (the axis domain still applies)
  std::vector<Lin> hi;  // empty: unbounded above

  friend bool operator==(const AxisBounds&, const AxisBounds&) = default;
};

/// A box on one strand with affine bounds, plus side conditions `guard ≥ 0`.
/// Which variables the bounds mention depends on the role of the piece.
struct Piece {
  StrandRef strand;
  std::array<AxisBounds, 2> axes;
  std::vector<AxisLin> guards;

  friend bool operator==(const Piece&, const Piece&) = default;
};

Piece map_piece(const Piece& p, Lin (*fn)(const Lin&));

/// Constant pieces covering `s`, one per box.
std::vector<Piece> boxes_of(const DefSet& s);
/// Union of constant pieces. Throws FragmentEscape on a non-constant bound.
DefSet pieces_to_set(const std::vector<Piece>& pieces, const SchemaPtr& schema);

/// Adds `hi − lo ≥ 0` for every lower/upper pair of one axis. `floor` is an
/// extra constant lower bound (the axis minimum) when finite.
void pair_bounds(const std::vector<Lin>& lo, const std::vector<Lin>& hi, int axis, Coord floor,
                 std::vector<AxisLin>& out);

/// Conjunction solved for the point coordinates Z.
struct Solved {
  std::array<AxisBounds, 2> z;
  std::vector<AxisLin> guards;  // Z-free constraints
};
/// Applies ∀Q ≥ 0 to each constraint, then turns those mentioning Z into
/// bounds. nullopt when some constraint fails outright. Throws
/// FragmentEscape on a Z coefficient outside ±1.
std::optional<Solved> solve(const std::vector<AxisLin>& constraints);

/// Drops dominated bounds and true constant guards. Returns false when the
/// piece is provably empty.
bool simplify(Piece& p, const GroundSchema& schema);

/// Cartesian product of the interval lists of a pattern's axes.
std::vector<std::array<Interval, 2>> interval_boxes(const std::array<IntervalSet, 2>& pattern,
                                                    int arity);
/// Adds the finite endpoints of a box as constant bounds.
void add_box(std::array<AxisBounds, 2>& axes, const std::array<Interval, 2>& box, int arity);

/// Readable form, e.g. `grid(G; rows=n; cols>=k+1)`.
std::string print_piece(const Piece& p, const GroundSchema& schema, bool parametric = false);

}  // namespace pretop::sym
