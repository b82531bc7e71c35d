#pragma once

#include "pretop/finite_pretop.hpp"

namespace fixtures {

using pretop::FinitePretop;
using pretop::Subset;

inline FinitePretop d2() { return FinitePretop::validate({"1", "2"}, {Subset::of({0}), Subset::of({1})}); }

inline FinitePretop q3() {
  return FinitePretop::validate({"1", "2", "3"}, {Subset::of({0, 1}), Subset::of({1, 2}), Subset::of({2})});
}

inline FinitePretop p3() {
  return FinitePretop::validate({"a", "b", "c"}, {Subset::of({0, 1}), Subset::of({1}), Subset::of({1, 2})});
}

inline FinitePretop s2() { return FinitePretop::validate({"a", "b"}, {Subset::of({0}), Subset::of({0, 1})}); }

template <typename Fn>
void for_each_subset(int n, Fn&& fn) {
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) fn(Subset(b));
}

template <typename Fn>
void for_each_nonempty(int n, Fn&& fn) {
  for (std::uint64_t b = 1; b < (std::uint64_t{1} << n); ++b) fn(Subset(b));
}

}  // namespace fixtures
