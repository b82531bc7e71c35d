#include "pretop/interval_set.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "pretop/errors.hpp"

namespace pretop {

namespace {

std::string endpoint(Coord c) {
  if (c == kNegInf) return "-inf";
  if (c == kPosInf) return "+inf";
  return std::to_string(c);
}

// c + 1 without leaving the sentinel range; +inf stays +inf.
Coord succ(Coord c) { return c == kPosInf ? kPosInf : c + 1; }
Coord pred(Coord c) { return c == kNegInf ? kNegInf : c - 1; }

}  // namespace

std::string to_string(const Axis& axis) {
  if (axis.kind == Axis::Kind::integers) return "Z";
  return "N" + std::to_string(axis.start);
}

IntervalSet IntervalSet::make(Axis axis, std::span<const Interval> raw) {
  std::vector<Interval> ivs;
  ivs.reserve(raw.size());
  for (const Interval& iv : raw) {
    if (iv.lo == kPosInf || iv.hi == kNegInf || iv.lo > iv.hi) {
      fail(ErrorKind::MalformedInterval, "[" + endpoint(iv.lo) + ", " + endpoint(iv.hi) + "]");
    }
    if ((is_finite(iv.lo) && (iv.lo <= -kCoordLimit || iv.lo >= kCoordLimit)) ||
        (is_finite(iv.hi) && (iv.hi <= -kCoordLimit || iv.hi >= kCoordLimit))) {
      fail(ErrorKind::MalformedInterval, "endpoint magnitude exceeds 2^62");
    }
    Interval clipped{std::max(iv.lo, axis.min()), iv.hi};
    if (clipped.lo <= clipped.hi) ivs.push_back(clipped);
  }
  std::sort(ivs.begin(), ivs.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  IntervalSet out(axis);
  for (const Interval& iv : ivs) {
    if (!out.intervals_.empty() && iv.lo <= succ(out.intervals_.back().hi)) {
      out.intervals_.back().hi = std::max(out.intervals_.back().hi, iv.hi);
    } else {
      out.intervals_.push_back(iv);
    }
  }
  return out;
}

IntervalSet IntervalSet::full(Axis axis) { return make(axis, {{axis.min(), kPosInf}}); }

IntervalSet IntervalSet::point(Axis axis, Coord c) { return make(axis, {{c, c}}); }

IntervalSet IntervalSet::range(Axis axis, Coord lo, Coord hi) {
  if (lo > hi) return IntervalSet(axis);
  return make(axis, {{lo, hi}});
}

bool IntervalSet::is_full() const noexcept {
  return intervals_.size() == 1 && intervals_[0].lo == axis_.min() &&
         intervals_[0].hi == kPosInf;
}

bool IntervalSet::contains(Coord c) const noexcept {
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), c,
                             [](Coord v, const Interval& iv) { return v < iv.lo; });
  if (it == intervals_.begin()) return false;
  --it;
  return c <= it->hi;
}

bool IntervalSet::includes(const IntervalSet& other) const {
  return other.difference(*this).empty();
}

void IntervalSet::check_axis(const IntervalSet& other) const {
  if (!(axis_ == other.axis_)) {
    fail(ErrorKind::AxisMismatch, to_string(axis_) + " vs " + to_string(other.axis_));
  }
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  check_axis(other);
  std::vector<Interval> all = intervals_;
  all.insert(all.end(), other.intervals_.begin(), other.intervals_.end());
  return make(axis_, all);
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  check_axis(other);
  IntervalSet out(axis_);
  std::size_t i = 0, j = 0;
  while (i < intervals_.size() && j < other.intervals_.size()) {
    const Interval& a = intervals_[i];
    const Interval& b = other.intervals_[j];
    Coord lo = std::max(a.lo, b.lo);
    Coord hi = std::min(a.hi, b.hi);
    if (lo <= hi) out.intervals_.push_back({lo, hi});
    if (a.hi < b.hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return out;
}

IntervalSet IntervalSet::complement() const {
  IntervalSet out(axis_);
  Coord start = axis_.min();
  bool done = false;
  for (const Interval& iv : intervals_) {
    if (iv.lo > start) out.intervals_.push_back({start, pred(iv.lo)});
    if (iv.hi == kPosInf) {
      done = true;
      break;
    }
    start = iv.hi + 1;
  }
  if (!done) out.intervals_.push_back({start, kPosInf});
  return out;
}

IntervalSet IntervalSet::difference(const IntervalSet& other) const {
  check_axis(other);
  return intersect(other.complement());
}

Classification IntervalSet::classify() const {
  Classification c;
  c.is_empty = intervals_.empty();
  c.has_plus_end = !intervals_.empty() && intervals_.back().hi == kPosInf;
  c.has_minus_end = !intervals_.empty() && intervals_.front().lo == kNegInf;
  c.is_finite = !c.has_plus_end && !c.has_minus_end;
  if (c.is_finite) {
    for (const Interval& iv : intervals_) {
      c.cardinality += static_cast<std::uint64_t>(iv.hi - iv.lo) + 1;
    }
  }
  IntervalSet comp = complement();
  Classification cc;
  cc.has_plus_end = !comp.intervals_.empty() && comp.intervals_.back().hi == kPosInf;
  cc.has_minus_end = !comp.intervals_.empty() && comp.intervals_.front().lo == kNegInf;
  c.is_cofinite = !cc.has_plus_end && !cc.has_minus_end;
  return c;
}

std::optional<Coord> IntervalSet::least() const noexcept {
  if (intervals_.empty() || intervals_.front().lo == kNegInf) return std::nullopt;
  return intervals_.front().lo;
}

Coord IntervalSet::finite_radius() const noexcept {
  Coord r = 0;
  for (const Interval& iv : intervals_) {
    if (is_finite(iv.lo)) r = std::max(r, iv.lo < 0 ? -iv.lo : iv.lo);
    if (is_finite(iv.hi)) r = std::max(r, iv.hi < 0 ? -iv.hi : iv.hi);
  }
  return r;
}

std::strong_ordering IntervalSet::compare(const IntervalSet& other) const noexcept {
  if (auto c = axis_.kind <=> other.axis_.kind; c != 0) return c;
  if (auto c = axis_.start <=> other.axis_.start; c != 0) return c;
  std::size_t n = std::min(intervals_.size(), other.intervals_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = intervals_[i].lo <=> other.intervals_[i].lo; c != 0) return c;
    if (auto c = intervals_[i].hi <=> other.intervals_[i].hi; c != 0) return c;
  }
  return intervals_.size() <=> other.intervals_.size();
}

IntervalSet bool_op(BoolOp op, const IntervalSet& lhs, const IntervalSet* rhs) {
  if (op == BoolOp::complement) return lhs.complement();
  if (rhs == nullptr) fail(ErrorKind::AxisMismatch, "binary operation without right operand");
  switch (op) {
    case BoolOp::unite: return lhs.unite(*rhs);
    case BoolOp::intersect: return lhs.intersect(*rhs);
    case BoolOp::difference: return lhs.difference(*rhs);
    case BoolOp::complement: break;
  }
  return lhs.complement();
}

std::ostream& operator<<(std::ostream& os, const IntervalSet& s) {
  os << '{';
  for (std::size_t i = 0; i < s.intervals().size(); ++i) {
    const Interval& iv = s.intervals()[i];
    if (i) os << ", ";
    os << '[' << endpoint(iv.lo) << ", " << endpoint(iv.hi) << ']';
  }
  return os << "} over " << to_string(s.axis());
}

}  // namespace pretop
