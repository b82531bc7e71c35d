#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pretop/symbolic_pretop.hpp"

namespace pretop::sym {

/// Ultrafilter trace on the definable sets of one strand: each axis is either
/// fixed at a parameter value (dir 0) or runs to +∞ / −∞ (dir ±1). Classes
/// with every axis fixed are point classes; the others are ends.
struct TraceClass {
  StrandRef strand;
  std::array<int, 2> dir{0, 0};

  bool is_end() const noexcept { return dir[0] != 0 || dir[1] != 0; }
  /// Number of fixed axes.
  int params(const GroundSchema& g) const;
  std::string label(const GroundSchema& g) const;
  /// Label with the fixed axes filled in, e.g. `G(row +end, col 0)`.
  std::string label_at(const GroundSchema& g, const Point& param) const;

  friend bool operator==(const TraceClass&, const TraceClass&) = default;
};

std::vector<TraceClass> point_classes(const GroundSchema& g);
/// Rays: +end, then −end on integer axes. Grids: (row fixed, col ±end),
/// (row ±end, col fixed), then the corners.
std::vector<TraceClass> ends(const GroundSchema& g);

/// Parameter space of a class: an atom `*` (no parameter), a ray `p` or a
/// grid `p`, with the fixed axes' domains.
SchemaPtr param_schema(const GroundSchema& g, const TraceClass& c);
/// Parameter point from the fixed axis values of a ground point.
Point param_point(const GroundSchema& g, const TraceClass& c, const SchemaPtr& ps, Coord a, Coord b);
/// Fixed axis values (a, b) of a parameter point.
std::array<Coord, 2> param_values(const GroundSchema& g, const TraceClass& c, const Point& p);

/// Limits of T(p): pieces on rule strands with bounds and guards in P.
std::vector<Piece> trace_limits(const SymbolicPretop& x, const TraceClass& c);
/// Limits of one member of the class, given its fixed axis values.
DefSet trace_limits_at(const SymbolicPretop& x, const TraceClass& c, Coord a = 0, Coord b = 0);

/// Parameters p with lim T(p) ∩ A ≠ ∅.
DefSet limits_meeting(const SymbolicPretop& x, const TraceClass& c, const DefSet& a);
/// Parameters p whose trace T(p) contains the carrier.
DefSet trace_domain(const SymbolicPretop& x, const TraceClass& c);

struct EndLimits {
  TraceClass cls;
  std::vector<Piece> limits;
  DefSet converging;  // parameters with a nonempty limit set
  DefSet domain;      // all parameters
};
EndLimits end_converges(const SymbolicPretop& x, const TraceClass& c);

struct SymCompactReport {
  bool compact = true;
  std::optional<TraceClass> cls;
  std::optional<DefSet> params;  // failing parameters of that class
  std::string witness;
};

/// Compactness at A of the filter generated by a decreasing family F(k)
/// given by pieces whose bounds mention K only.
SymCompactReport sym_compact_at(const SymbolicPretop& x, const std::vector<Piece>& family,
                                const DefSet& a);
/// Compactness at A of the principal filter of F.
SymCompactReport sym_compact_at(const SymbolicPretop& x, const DefSet& f, const DefSet& a);
SymCompactReport sym_is_compact(const SymbolicPretop& x);

}  // namespace pretop::sym
