#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace pretop {

/// Subset of a finite point set of at most 64 points, encoded as a bit vector
/// in declaration order. Numeric order of the bits is the "least witness"
/// order used by every exhaustive search.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}

  static constexpr Subset single(int i) { return Subset(std::uint64_t{1} << i); }
  static constexpr Subset full(int n) {
    return Subset(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static Subset of(std::initializer_list<int> points) {
    Subset s;
    for (int p : points) s = s | single(p);
    return s;
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool contains(int i) const noexcept { return (bits_ >> i) & 1U; }
  constexpr bool includes(Subset o) const noexcept { return (o.bits_ & ~bits_) == 0; }
  constexpr bool meets(Subset o) const noexcept { return (bits_ & o.bits_) != 0; }
  int count() const noexcept { return std::popcount(bits_); }
  int first() const noexcept { return std::countr_zero(bits_); }

  constexpr Subset complement(int n) const noexcept { return Subset(~bits_ & full(n).bits_); }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
  friend constexpr auto operator<=>(Subset, Subset) = default;

  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Calls fn(S) for every S with base ⊆ S ⊆ full(n), in increasing numeric order.
template <typename Fn>
void for_each_superset(Subset base, int n, Fn&& fn) {
  const std::uint64_t free = Subset::full(n).bits() & ~base.bits();
  std::uint64_t sub = 0;
  // Enumerates the subsets of `free` in increasing order.
  for (;;) {
    if (!fn(Subset(base.bits() | sub))) return;
    if (sub == free) return;
    sub = ((sub | ~free) + 1) & free;
  }
}

}  // namespace pretop
