#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pretop {

using Coord = std::int64_t;

/// Sentinels standing for -inf and +inf endpoints. Finite coordinates must stay
/// well inside these (|c| < 2^62) so that offset arithmetic never wraps.
inline constexpr Coord kNegInf = std::numeric_limits<Coord>::min();
inline constexpr Coord kPosInf = std::numeric_limits<Coord>::max();
inline constexpr Coord kCoordLimit = Coord{1} << 62;

inline bool is_finite(Coord c) noexcept { return c != kNegInf && c != kPosInf; }

/// Domain of one coordinate axis: the integers, or the naturals starting at
/// `start` (0 for ray axes, 1 for the Urysohn grid rows).
struct Axis {
  enum class Kind { naturals, integers };

  Kind kind = Kind::integers;
  Coord start = 0;

  static Axis integers() noexcept { return {Kind::integers, 0}; }
  static Axis naturals(Coord first = 0) noexcept { return {Kind::naturals, first}; }

  Coord min() const noexcept { return kind == Kind::naturals ? start : kNegInf; }
  bool has_minus_side() const noexcept { return kind == Kind::integers; }

  friend bool operator==(const Axis&, const Axis&) = default;
};

std::string to_string(const Axis& axis);

/// Closed interval; `lo` may be kNegInf and `hi` may be kPosInf.
struct Interval {
  Coord lo = 0;
  Coord hi = 0;

  friend bool operator==(const Interval&, const Interval&) = default;
};

struct Classification {
  bool is_empty = false;
  bool is_finite = false;
  std::uint64_t cardinality = 0;  // meaningful only when is_finite
  bool is_cofinite = false;
  bool has_plus_end = false;
  bool has_minus_end = false;
};

/// A finite union of integer intervals over one axis, kept in normal form:
/// ascending, pairwise disjoint, non-adjacent, clipped to the axis domain.
/// Two sets are equal iff their interval lists are identical.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(Axis axis) : axis_(axis) {}

  /// Normalizes arbitrary endpoint pairs. Throws MalformedInterval for
  /// lo > hi, lo = +inf or hi = -inf.
  static IntervalSet make(Axis axis, std::span<const Interval> raw);
  static IntervalSet make(Axis axis, std::initializer_list<Interval> raw) {
    return make(axis, std::span<const Interval>(raw.begin(), raw.size()));
  }
  static IntervalSet full(Axis axis);
  static IntervalSet point(Axis axis, Coord c);
  static IntervalSet range(Axis axis, Coord lo, Coord hi);

  const Axis& axis() const noexcept { return axis_; }
  const std::vector<Interval>& intervals() const noexcept { return intervals_; }

  bool empty() const noexcept { return intervals_.empty(); }
  bool is_full() const noexcept;
  bool contains(Coord c) const noexcept;
  bool includes(const IntervalSet& other) const;  // other ⊆ *this

  IntervalSet unite(const IntervalSet& other) const;
  IntervalSet intersect(const IntervalSet& other) const;
  IntervalSet difference(const IntervalSet& other) const;
  IntervalSet complement() const;

  Classification classify() const;

  /// Least element, if the set is nonempty and bounded below.
  std::optional<Coord> least() const noexcept;
  /// Largest absolute value among finite endpoints (0 when there are none).
  Coord finite_radius() const noexcept;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;
  friend auto operator<=>(const IntervalSet& a, const IntervalSet& b) {
    return a.compare(b);
  }

 private:
  std::strong_ordering compare(const IntervalSet& other) const noexcept;
  void check_axis(const IntervalSet& other) const;

  Axis axis_;
  std::vector<Interval> intervals_;
};

enum class BoolOp { unite, intersect, complement, difference };

/// Dispatching form used by callers that pick the operation at runtime.
/// `rhs` must be given for binary operations and is ignored for complement.
IntervalSet bool_op(BoolOp op, const IntervalSet& lhs, const IntervalSet* rhs = nullptr);

std::ostream& operator<<(std::ostream& os, const IntervalSet& s);

}  // namespace pretop
