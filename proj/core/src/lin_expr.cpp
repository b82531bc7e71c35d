#include "pretop/lin_expr.hpp"

#include "pretop/errors.hpp"

namespace pretop::sym {

std::optional<Lin> forall_q(Lin lin) {
  if (lin.q < 0) return std::nullopt;
  lin.q = 0;
  return lin;
}

std::optional<Lin> forall_k(Lin lin) {
  if (lin.k < 0) return std::nullopt;
  lin.k = 0;
  return lin;
}

Coord floor_div(Coord a, Coord b) {
  Coord q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Coord ceil_div(Coord a, Coord b) { return -floor_div(-a, b); }

IntervalSet p_region(const Axis& axis, int which, const std::vector<AxisLin>& constraints) {
  Coord lo = kNegInf, hi = kPosInf;
  for (const AxisLin& c : constraints) {
    if (c.axis != which) continue;
    const Lin& l = c.lin;
    if (l.z != 0 || l.q != 0 || l.k != 0) fail(ErrorKind::FragmentEscape, "parameter constraint " + to_string(l));
    if (l.p == 0) {
      if (l.c < 0) return IntervalSet(axis);
    } else if (l.p == 1) {
      lo = std::max(lo, -l.c);
    } else if (l.p == -1) {
      hi = std::min(hi, l.c);
    } else {
      fail(ErrorKind::FragmentEscape, "parameter coefficient outside ±1 in " + to_string(l));
    }
  }
  if (lo != kNegInf && hi != kPosInf && lo > hi) return IntervalSet(axis);
  return IntervalSet::make(axis, {{lo, hi}});
}

std::string to_string(const Lin& l, const char* zname, const char* pname) {
  std::string out;
  auto term = [&](int coef, const char* name) {
    if (coef == 0) return;
    if (coef < 0) {
      out += out.empty() ? "-" : "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (coef != 1 && coef != -1) out += std::to_string(coef < 0 ? -coef : coef) + "*";
    out += name;
  };
  term(l.z, zname);
  term(l.p, pname);
  term(l.q, "k");
  term(l.k, "k");
  if (l.c != 0 || out.empty()) {
    if (!out.empty() && l.c > 0) out += "+";
    out += std::to_string(l.c);
  }
  return out;
}

}  // namespace pretop::sym
