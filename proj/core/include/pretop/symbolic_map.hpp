#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pretop/symbolic_pretop.hpp"
#include "pretop/traces.hpp"

namespace pretop::sym {

/// Image of one source strand: a constant target point, or the coordinate
/// map v ↦ scale·v + shift onto a target strand of the same arity.
struct StrandMap {
  std::string source;
  std::optional<Point> constant;
  std::string target;
  std::array<Coord, 2> scale{1, 1};
  std::array<Coord, 2> shift{0, 0};

  static StrandMap to_point(std::string source, Point p);
  static StrandMap affine(std::string source, std::string target, std::array<Coord, 2> scale = {1, 1},
                          std::array<Coord, 2> shift = {0, 0});

  friend bool operator==(const StrandMap&, const StrandMap&) = default;
};

class SymMap {
 public:
  /// Every source strand meeting the carrier needs exactly one entry
  /// (SchemaMismatch); scales must be positive (FragmentEscape) and the image
  /// of the carrier must stay in the target carrier (UnknownPoint).
  static SymMap make(SymbolicPretop source, SymbolicPretop target, std::vector<StrandMap> strands);

  const SymbolicPretop& source() const noexcept { return source_; }
  const SymbolicPretop& target() const noexcept { return target_; }
  const std::vector<StrandMap>& strands() const noexcept { return strands_; }
  /// Entry for a source strand, if the strand meets the carrier.
  const StrandMap* entry(StrandRef s) const;

  /// Throws UnknownPoint outside the source carrier.
  Point apply(const Point& p) const;
  /// f⁻[T] ∩ carrier for a set on the target schema.
  DefSet preimage(const DefSet& t) const;

  std::string describe() const;

 private:
  SymbolicPretop source_;
  SymbolicPretop target_;
  std::vector<StrandMap> strands_;
  std::vector<int> slot_;  // source strand position → index into strands_, or −1
};

/// The class the member of `c` with fixed values (a, b) is sent to, with the
/// fixed coordinates of the image.
struct ImageTrace {
  TraceClass cls;
  Coord a = 0;
  Coord b = 0;
};
ImageTrace image_trace(const SymMap& f, const TraceClass& c, Coord a = 0, Coord b = 0);

/// Whether the image covers the target carrier.
bool sym_is_onto(const SymMap& f);

/// Whether every vicinity family has kernel {x}, so principal traces only
/// converge to their own point.
bool kernels_singleton(const SymbolicPretop& x);

struct SymContinuityReport {
  bool continuous = true;
  std::optional<std::string> witness;  // class label where lim T ⊄ f⁻[lim f(T)]
};
/// Vicinity characterization checked on every trace class meeting the
/// carrier. Throws UnclassifiableImageTrace on parametric classes outside
/// the decidable cases.
SymContinuityReport sym_is_continuous(const SymMap& f);

}  // namespace pretop::sym
