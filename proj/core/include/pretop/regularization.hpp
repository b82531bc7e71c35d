#pragma once

#include <optional>
#include <vector>

#include "pretop/finite_pretop.hpp"

namespace pretop {

/// M_r(x) = adh(M(x)).
FinitePretop partial_regularization(const FinitePretop& x);

/// Kernels of F, F¹, F², ... up to the first repeated level. On a finite
/// space the kernel of Fⁿ⁺¹ is ⋃{M(y) : y ∈ ker Fⁿ}.
struct FilterTower {
  PrincipalFilter base;
  std::vector<Subset> levels;  // levels[0] = ker F, last entry = ker F°
  int stabilized_at = 0;       // least n with Fⁿ = Fⁿ⁺¹
  bool open = false;           // F ∈ F implies inh F ∈ F
  bool inherent = false;       // inh F ≠ ∅ for every member

  PrincipalFilter level(int n) const;
  PrincipalFilter limit() const { return {levels.back()}; }
};
/// Throws EmptyKernel.
FilterTower filter_tower(const FinitePretop& x, PrincipalFilter f);

struct TowerLemmas {
  Subset adh_pi;      // adh_π F
  Subset adh_rpi;     // adh_rπ F
  Subset adh_pi_f1;   // adh_π F¹
  bool open = false;
  bool open_lemma = true;   // open ⇒ adh_π F = adh_rπ F
  bool tower_lemma = true;  // adh_rπ F = adh_π F¹
  bool shifted = true;      // adh_rπ Fⁿ = adh_π Fⁿ⁺¹ along the whole tower
};
TowerLemmas tower_lemmas_check(const FinitePretop& x, PrincipalFilter f);

struct ThetaPair {
  FinitePretop neighbourhood;  // M(x) = minimal open set at x
  FinitePretop theta;          // M(x) = closure of the minimal open set
};
ThetaPair theta_of_topology(const FiniteTopology& t);

enum class QuasiPhcMethod { rpi_compact, adh_cover, inherent_filter, tower_adh };

struct QuasiPhcReport {
  bool quasi_phc = true;
  bool hausdorff = false;
  bool phc() const { return quasi_phc && hausdorff; }
  std::optional<Subset> failing_kernel;
  std::optional<std::vector<Subset>> failing_cover;
};
QuasiPhcReport is_quasi_phc(const FinitePretop& x, QuasiPhcMethod method);

/// Least finite subfamily (by size, then by member indices) whose
/// adherences cover X, if any.
std::optional<std::vector<Subset>> find_adh_subcover(const FinitePretop& x, const std::vector<Subset>& cover);

enum class HSetMethod { open_filter, open_ultrafilter, theta_adh };
/// Throws EmptySubspace for empty A.
bool hset_check_finite(const FiniteTopology& t, Subset a, HSetMethod method);

}  // namespace pretop
