#pragma once

#include <optional>
#include <vector>

#include "pretop/finite_pretop.hpp"

namespace pretop {

/// Total function between two finite pretopological spaces.
class FiniteMap {
 public:
  /// Throws UnknownPoint when the table is not total or leaves the target.
  static FiniteMap make(FinitePretop source, FinitePretop target, std::vector<int> table);
  static FiniteMap identity(const FinitePretop& x) { return identity(x, x); }
  /// Identity on the point set, between two structures on it.
  static FiniteMap identity(const FinitePretop& source, const FinitePretop& target);

  const FinitePretop& source() const noexcept { return source_; }
  const FinitePretop& target() const noexcept { return target_; }
  const std::vector<int>& table() const noexcept { return table_; }
  int operator()(int x) const { return table_.at(x); }

  Subset image(Subset a) const;
  Subset preimage(Subset b) const;
  Subset fiber(int y) const { return preimage(Subset::single(y)); }
  bool surjective() const { return image(source_.points()) == target_.points(); }

 private:
  FinitePretop source_;
  FinitePretop target_;
  std::vector<int> table_;
};

/// g ∘ f; throws PointSetMismatch when f's target is not g's source.
FiniteMap compose(const FiniteMap& g, const FiniteMap& f);

PrincipalFilter image_filter(const FiniteMap& f, PrincipalFilter filter);
/// Throws EmptyPreimage when the kernel misses the range.
PrincipalFilter preimage_filter(const FiniteMap& f, PrincipalFilter filter);

enum class ContinuityMethod { limit, adh_filter, adh_set, inh, vicinity };

struct ContinuityReport {
  bool continuous = true;
  std::optional<int> point;   // limit, vicinity
  std::optional<Subset> set;  // failing kernel, A, B or V
};
ContinuityReport is_continuous(const FiniteMap& f, ContinuityMethod method);

/// Continuity between the θ-pretopologies of two finite topologies.
bool is_theta_continuous(const FiniteTopology& x, const FiniteTopology& y, const std::vector<int>& table);
/// Continuity of f:(X, π) → (Y, rτ).
bool is_w_theta_continuous(const FiniteMap& f);

enum class PerfectMethod { definition, adh_inequality, a_and_b };

struct PerfectReport {
  bool perfect = true;
  std::optional<Subset> kernel;  // target kernel (definition) or source kernel / set
  std::optional<int> point;      // limit y (definition) or fiber point (a-and-b)
  bool condition_a = true;       // filled by a-and-b
  bool condition_b = true;
};
PerfectReport is_perfect(const FiniteMap& f, PerfectMethod method);

/// {y : f⁻(y) ⊆ A}
Subset f_sharp(const FiniteMap& f, Subset a);

struct IrreducibleReport {
  bool strongly_irreducible = true;
  std::optional<std::pair<Subset, Subset>> witness;  // least (U, V) with U ≤ V
};
/// Quantifies over all U, V with nonempty inherence and U ∩ V ≠ ∅; each such
/// pair needs a nonempty fiber inside U ∩ V.
IrreducibleReport is_strongly_irreducible(const FiniteMap& f);
/// Whether the given pair is a counterexample to strong irreducibility.
bool irreducibility_fails_at(const FiniteMap& f, Subset u, Subset v);

/// Calls fn for every function table from n to m points (m^n tables).
void for_each_table(int n, int m, const std::function<void(const std::vector<int>&)>& fn);

}  // namespace pretop
