#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pretop/finite_pretop.hpp"
#include "pretop/map_analysis.hpp"

namespace pretop {

struct ThetaQuotientReport {
  FinitePretop space;  // σ on the target point set
  FiniteMap map;       // f : X → (Y, σ)
  /// ↑K →σ y, f⁻(↑K) ⊇ V_π(f⁻(y)) and K ⊆ M_σ(y) agree for every y and K ≠ ∅.
  bool lemma_holds = true;
  bool source_compact = false;
  bool source_hausdorff = false;
  bool strongly_irreducible = false;
  /// Evaluated when f is strongly irreducible.
  std::optional<bool> w_theta_continuous;
};

/// M_σ(y) = f#[⋃_{x ∈ f⁻(y)} M(x)]. Throws NotSurjective.
ThetaQuotientReport theta_quotient(const FinitePretop& x, std::vector<std::string> target_names,
                                   std::vector<int> table);

/// Finite extension: Y with a dense subset X.
struct Extension {
  FinitePretop space;
  Subset base;

  /// Names of the base points in order.
  std::vector<std::string> base_names() const;
  /// M_Y(p) ∩ X
  Subset trace(int p) const { return space.min_vicinity(p) & base; }
  FinitePretop base_space() const { return restrict(space, base); }
};

/// Throws EmptySubspace for X = ∅ and NotDense when adh_Y X ≠ Y.
Extension make_extension(const FinitePretop& y, Subset x);

/// M_+(p) = {p} ∪ (M_Y(p) ∩ X)
FinitePretop strict_extension(const Extension& e);
/// o(A) = {p : M_Y(p) ∩ X ⊆ A}
Subset o_set(const Extension& e, Subset a);
/// M_#(p) = o(M_Y(p) ∩ X)
FinitePretop simple_extension(const Extension& e);

struct ProjectiveReport {
  bool leq = false;
  std::optional<std::vector<int>> witness;  // continuous point-fixing map Y → Z
};
/// Z ≤ Y: some continuous map Y → Z fixes the common base. Searches tables
/// lexicographically. Throws DifferentBase when the bases differ by name.
ProjectiveReport projectively_leq(const Extension& z, const Extension& y);

struct StarKappaReport {
  FinitePretop star;
  FinitePretop kappa;
  bool regular = false;
  std::string note;
};
StarKappaReport star_and_kappa_finite(const FinitePretop& x);

}  // namespace pretop
