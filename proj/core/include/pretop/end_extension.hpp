#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pretop/symbolic_map.hpp"
#include "pretop/symbolic_pretop.hpp"
#include "pretop/traces.hpp"

namespace pretop::sym {

/// An added point and the trace classes whose members it absorbs, each
/// given by its fixed coordinates.
struct AddedPoint {
  std::string name;
  struct Member {
    TraceClass cls;
    Coord a = 0;
    Coord b = 0;
  };
  std::vector<Member> members;
};

/// Compact extension of a symbolic space: base atoms, rays and grids keep
/// their indices and new atoms are appended. Each added atom ω has vicinities
/// {ω} ∪ (tails of its member traces).
struct EndExtension {
  SymbolicPretop space;
  SymbolicPretop base;
  std::vector<AddedPoint> added;
  bool compact = false;
  SymHausdorffReport hausdorff;

  /// A base set seen inside the extension.
  DefSet embed(const DefSet& base_set) const;
  /// The added atom absorbing the member of `cls` at (a, b), if any.
  std::optional<Point> added_for(const TraceClass& cls, Coord a = 0, Coord b = 0) const;
};

/// One atom per non-converging end member. Throws FragmentEscape when a
/// parametric end fails at infinitely many parameters.
EndExtension end_extension(const SymbolicPretop& x);
/// A single atom `w` absorbing every non-converging end member.
EndExtension one_point_compactification(const SymbolicPretop& x);

struct KappaMap {
  SymMap map;
  std::vector<std::pair<std::string, std::string>> assigned;  // added point → image
  SymContinuityReport continuity;
  bool onto = false;
};
/// Extends f: X → Y to the extensions. An added point goes to the least
/// limit of its image trace in Y, else to the added point of the image
/// class, else to the least limit in the target extension. Throws
/// UnclassifiableImageTrace when none exists and SchemaMismatch when the
/// extensions are not over f's spaces.
KappaMap extend_map_kappa(const SymMap& f, const EndExtension& source, const EndExtension& target);

}  // namespace pretop::sym
