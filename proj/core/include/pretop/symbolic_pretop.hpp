#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pretop/def_set.hpp"
#include "pretop/finite_pretop.hpp"
#include "pretop/sym_set.hpp"

namespace pretop::sym {

/// Vicinity rule: every point x of the pattern box gets the decreasing family
/// V(x, k) = ⋃ template pieces evaluated at (x, k), k = 0, 1, ...
///
/// Template bounds may mention the pattern coordinate of the same axis (Z with
/// coefficient 1) and k (Q). Lower bounds must not decrease in k and upper
/// bounds must not increase.
struct Rule {
  StrandRef strand;
  std::array<IntervalSet, 2> pattern;
  std::vector<Piece> tmpl;
};

class SymbolicPretop {
 public:
  /// Validates and builds. Patterns must partition the carrier (PatternGap,
  /// PatternOverlap), templates must be monotone (NonMonotoneRule) and every
  /// point must lie in all of its vicinities (SelfMembershipViolation).
  static SymbolicPretop build(SchemaPtr schema, std::vector<Rule> rules,
                              std::optional<DefSet> carrier = std::nullopt);

  const SchemaPtr& schema() const noexcept { return schema_; }
  const std::vector<Rule>& rules() const noexcept { return rules_; }
  const DefSet& carrier() const noexcept { return carrier_; }

  DefSet pattern_set(std::size_t rule) const;
  std::string rule_label(std::size_t rule) const;
  /// Index of the rule whose pattern holds the point. Throws UnknownPoint.
  std::size_t rule_of(const Point& x) const;
  /// V(x, k) ∩ carrier.
  DefSet vicinity(const Point& x, Coord k) const;
  /// Largest absolute constant in patterns, templates and carrier.
  Coord constant_radius() const;

  std::string describe() const;

 private:
  SchemaPtr schema_;
  std::vector<Rule> rules_;
  DefSet carrier_;
};

DefSet sym_adh(const SymbolicPretop& x, const DefSet& s);
DefSet sym_inh(const SymbolicPretop& x, const DefSet& s);

/// Partial regularization: each rule's template is replaced by the
/// adherence of its vicinities.
SymbolicPretop sym_regularize(const SymbolicPretop& x);
/// `iterations` rounds of adherence in the regularization of X.
DefSet cl_theta(const SymbolicPretop& x, const DefSet& s, int iterations = 1);

/// Subspace on A ∩ carrier. Throws EmptySubspace.
SymbolicPretop sym_restrict(const SymbolicPretop& x, const DefSet& a);

struct SymHausdorffReport {
  bool hausdorff = true;
  std::optional<std::pair<std::string, std::string>> witness;  // rule labels
};
SymHausdorffReport sym_hausdorff(const SymbolicPretop& x);

/// Finite window: rows and ray indices from the axis start (−W on integer
/// axes) up to W, vicinities taken at k = W and clipped. Throws
/// WindowTooSmall when W < constant_radius() + 2.
struct Truncation {
  FinitePretop space;
  std::vector<Point> points;  // index-aligned with space
};
Truncation truncate(const SymbolicPretop& x, Coord w);

/// Finite space as a symbolic space over an atoms-only schema.
SymbolicPretop from_finite(const FinitePretop& x);

/// Throws UnknownBuiltin.
SymbolicPretop builtin(const std::string& name, int param = 1);
SymbolicPretop urysohn();
SymbolicPretop half_grid();
SymbolicPretop discrete_ray(int copies);

}  // namespace pretop::sym
