#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pretop/interval_set.hpp"

namespace pretop::sym {

/// c + z·Z + p·P + q·Q + k·K on a single axis.
///
/// Z is the coordinate of the point under test, P a parameter coordinate,
/// Q the vicinity index of the point under test (universally quantified) and
/// K the index of a parametrized set. Stored templates use Z for the pattern
/// coordinate and Q for their own index.
struct Lin {
  Coord c = 0;
  int z = 0;
  int p = 0;
  int q = 0;
  int k = 0;

  static Lin constant(Coord v) { return {v, 0, 0, 0, 0}; }
  bool is_constant() const noexcept { return z == 0 && p == 0 && q == 0 && k == 0; }
  Coord eval(Coord zv, Coord pv, Coord qv, Coord kv) const noexcept {
    return c + z * zv + p * pv + q * qv + k * kv;
  }

  friend Lin operator-(const Lin& a, const Lin& b) {
    return {a.c - b.c, a.z - b.z, a.p - b.p, a.q - b.q, a.k - b.k};
  }
  friend bool operator==(const Lin&, const Lin&) = default;
};

/// Template role (Z = self, Q = own index) to set role (P = self, K = index).
inline Lin as_set(const Lin& l) { return {l.c, 0, l.z, 0, l.q}; }
/// Set role back to template role.
inline Lin as_template(const Lin& l) { return {l.c, l.p, 0, l.k, 0}; }
/// Template role to the role of a point under test (unchanged).
inline Lin as_point(const Lin& l) { return l; }
/// Replaces P by a constant.
inline Lin bind_p(const Lin& l, Coord pv) { return {l.c + l.p * pv, l.z, 0, l.q, l.k}; }

/// A constraint `lin ≥ 0` tied to one axis.
struct AxisLin {
  int axis = 0;
  Lin lin;

  friend bool operator==(const AxisLin&, const AxisLin&) = default;
};

/// ∀Q ≥ 0 (lin ≥ 0): nullopt when it fails for large Q, else lin at Q = 0.
std::optional<Lin> forall_q(Lin lin);
/// ∀K ≥ 0 (lin ≥ 0), same convention.
std::optional<Lin> forall_k(Lin lin);

/// Integer division rounding towards −∞ / +∞.
Coord floor_div(Coord a, Coord b);
Coord ceil_div(Coord a, Coord b);

/// Set of values of P on `axis` satisfying every P-only constraint of that
/// axis. Throws FragmentEscape when a constraint mentions Z, Q, K or has
/// |p| > 1.
IntervalSet p_region(const Axis& axis, int which, const std::vector<AxisLin>& constraints);

std::string to_string(const Lin& l, const char* zname = "z", const char* pname = "p");

}  // namespace pretop::sym
