#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pretop/subset.hpp"

namespace pretop {

/// Finite pretopological (Čech closure) space given by its minimal vicinities:
/// a filter ↑K converges to x iff K ⊆ M(x), and x ∈ M(x) always.
class FinitePretop {
 public:
  FinitePretop() = default;

  /// Throws AxiomViolation naming the first point with x ∉ M(x), or
  /// SizeLimit above 64 points.
  static FinitePretop validate(std::vector<std::string> names, std::vector<Subset> vicinity);
  /// Points named "1".."n".
  static FinitePretop numbered(std::vector<Subset> vicinity);
  static FinitePretop discrete(int n);

  int size() const noexcept { return static_cast<int>(vicinity_.size()); }
  Subset points() const noexcept { return Subset::full(size()); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(int x) const { return names_.at(x); }
  std::optional<int> index_of(const std::string& name) const;
  Subset min_vicinity(int x) const { return vicinity_.at(x); }
  const std::vector<Subset>& vicinities() const noexcept { return vicinity_; }

  /// {x : M(x) ∩ A ≠ ∅}
  Subset adh(Subset a) const noexcept;
  /// {x : M(x) ⊆ A}
  Subset inh(Subset a) const noexcept;

  friend bool operator==(const FinitePretop&, const FinitePretop&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Subset> vicinity_;
};

/// On a finite set every filter is principal; it is stored by its kernel.
struct PrincipalFilter {
  Subset kernel;

  friend bool operator==(const PrincipalFilter&, const PrincipalFilter&) = default;
};

Subset adh_set(const FinitePretop& x, Subset a);
Subset inh_set(const FinitePretop& x, Subset a);
/// Throws EmptyKernel.
Subset adh_filter(const FinitePretop& x, PrincipalFilter f);
bool converges(const FinitePretop& x, PrincipalFilter f, int point);

struct HausdorffReport {
  bool hausdorff = true;
  std::optional<std::pair<int, int>> witness;  // least pair with M(x) ∩ M(y) ≠ ∅
};
HausdorffReport is_hausdorff(const FinitePretop& x);

struct TopologicalReport {
  bool topological = true;
  std::optional<Subset> witness;  // least A with adh(adh A) ≠ adh A
};
TopologicalReport is_topological(const FinitePretop& x);

struct RegularReport {
  bool regular = true;
  std::optional<int> witness;  // least x with adh(M(x)) ≠ M(x)
};
RegularReport is_regular(const FinitePretop& x);

struct CoverReport {
  bool cover = true;
  std::optional<int> uncovered;
};
/// π-cover test: every point of A (of X when absent) has a member C ⊇ M(x).
CoverReport is_cover(const FinitePretop& x, const std::vector<Subset>& family,
                     std::optional<Subset> of = std::nullopt);

enum class CompactMethod { filter, cover };

struct CompactAtReport {
  bool compact = true;
  std::optional<Subset> failing_kernel;              // filter method
  std::optional<std::vector<Subset>> failing_cover;  // cover method
};
/// Whether ↑ker is compact at A. The filter method scans every meshing
/// kernel; the cover method scans every cover of A made of one vicinity per
/// point. Requires A and the kernel nonempty.
CompactAtReport compact_at(const FinitePretop& x, PrincipalFilter f, Subset a, CompactMethod method);

enum class CoverCompactMethod { filter_refines, cover, vicinity_separation };
bool is_cover_compact(const FinitePretop& x, Subset a, CoverCompactMethod method);

/// Subspace on A with M'(x) = M(x) ∩ A; points keep their relative order.
/// Throws EmptySubspace.
FinitePretop restrict(const FinitePretop& x, Subset a);

/// x1 ≤ x2 (x1 coarser): every x2-limit is an x1-limit, i.e. M1(x) ⊇ M2(x).
/// Throws PointSetMismatch when the point names differ.
bool coarser_leq(const FinitePretop& x1, const FinitePretop& x2);

// Exhaustive enumeration of all pretopologies on n ≤ 5 points.
inline constexpr int kMaxEnumeratedPoints = 5;
std::uint64_t pretop_count(int n);
/// The index-th pretopology in lexicographic order (bit i of the index
/// toggles the i-th off-diagonal pair (x, y), x-major). Throws SizeLimit.
FinitePretop pretop_at(int n, std::uint64_t index);
void for_each_pretop(int n, const std::function<void(const FinitePretop&)>& fn);

/// Finite topology given by its open sets.
class FiniteTopology {
 public:
  /// Throws InvalidTopology unless the family contains ∅, X and is closed
  /// under unions and intersections.
  static FiniteTopology make(std::vector<std::string> names, std::vector<Subset> opens);
  static FiniteTopology from_pretop(const FinitePretop& x);  // x must be topological

  int size() const noexcept { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<Subset>& opens() const noexcept { return opens_; }
  bool is_open(Subset s) const;
  Subset min_open(int x) const;
  Subset closure(Subset a) const;
  /// The open-neighbourhood pretopology, M(x) = minimal open set at x.
  FinitePretop neighbourhood_pretop() const;

 private:
  std::vector<std::string> names_;
  std::vector<Subset> opens_;  // sorted ascending
};

/// Topologies on n ≤ 3 points, derived from the topological pretopologies.
std::vector<FiniteTopology> enumerate_topologies(int n);

}  // namespace pretop
