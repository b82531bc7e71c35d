#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pretop/constructions.hpp"
#include "pretop/end_extension.hpp"
#include "pretop/finite_pretop.hpp"
#include "pretop/map_analysis.hpp"
#include "pretop/symbolic_map.hpp"

namespace pretop::model {

struct SpaceDecl {
  std::string name;
  FinitePretop space;

  friend bool operator==(const SpaceDecl&, const SpaceDecl&) = default;
};

struct TopologyDecl {
  std::string name;
  FiniteTopology topology;

  friend bool operator==(const TopologyDecl& a, const TopologyDecl& b) {
    return a.name == b.name && a.topology.names() == b.topology.names() && a.topology.opens() == b.topology.opens();
  }
};

struct MapDecl {
  std::string name;
  std::string source;
  std::string target;
  std::vector<int> table;                 // finite source
  std::vector<sym::StrandMap> strands;    // symbolic source

  bool symbolic() const noexcept { return table.empty(); }
  friend bool operator==(const MapDecl&, const MapDecl&) = default;
};

/// `urysohn`, `half_grid`, `discrete_ray(c)`, or a construction on earlier
/// names: `regularize(X)`, `end_extension(X)`, `one_point(X)`,
/// `restrict(X, SET)`, `lift(FINITE)`.
struct BuiltinDecl {
  std::string name;
  std::string op;
  int param = 0;
  std::vector<std::string> args;
  sym::SymbolicPretop value;
  std::optional<sym::EndExtension> extension;

  friend bool operator==(const BuiltinDecl& a, const BuiltinDecl& b) {
    return a.name == b.name && a.op == b.op && a.param == b.param && a.args == b.args;
  }
};

struct SetDecl {
  std::string name;
  std::string space;
  std::variant<Subset, DefSet> value;

  friend bool operator==(const SetDecl&, const SetDecl&) = default;
};

struct ExtensionDecl {
  std::string name;
  std::string space;
  Subset base;

  friend bool operator==(const ExtensionDecl&, const ExtensionDecl&) = default;
};

using Decl = std::variant<SpaceDecl, TopologyDecl, MapDecl, BuiltinDecl, SetDecl, ExtensionDecl>;

const std::string& decl_name(const Decl& d);

/// Parsed model file. Names are unique across all declarations.
class ModelDocument {
 public:
  const std::vector<Decl>& decls() const noexcept { return decls_; }
  const Decl* find(const std::string& name) const;

  // Lookups throw ResolutionError on a missing name or a wrong kind.
  const FinitePretop& finite_space(const std::string& name) const;
  const FiniteTopology& topology(const std::string& name) const;
  const sym::SymbolicPretop& symbolic_space(const std::string& name) const;
  const BuiltinDecl& builtin(const std::string& name) const;
  const MapDecl& map_decl(const std::string& name) const;
  FiniteMap finite_map(const std::string& name) const;
  sym::SymMap symbolic_map(const std::string& name) const;
  const SetDecl& set(const std::string& name) const;
  Extension extension(const std::string& name) const;

  /// Space names in declaration order (finite spaces and builtins).
  std::vector<std::string> space_names() const;

  void add(Decl d);

  friend bool operator==(const ModelDocument&, const ModelDocument&) = default;

 private:
  std::vector<Decl> decls_;
};

/// Grammar:
///
///   doc     := stmt*                      ('#' starts a line comment)
///   stmt    := 'space' NAME '{' 'points' ':' NAME* ';' ('vicinity' NAME ':' fset ';')* '}'
///            | 'topology' NAME '{' 'points' ':' NAME* ';' 'opens' ':' fset* ';' '}'
///            | 'map' NAME ':' NAME '->' NAME '{' (ENTRY '->' IMAGE ';')* '}'
///            | 'builtin' NAME '=' EXPR ';'
///            | 'set' NAME ['in' NAME] '=' LITERAL ';'
///            | 'extension' NAME '=' NAME 'over' (fset | NAME) ';'
///   fset    := '{' NAME* '}'
///
/// Unlisted vicinities default to {p}. A set without `in` belongs to the
/// latest space. Symbolic map images are a point (`w`, `R0[3]`, `G(1,-2)`),
/// a strand name, or a strand with coordinate maps such as `R0(2n+1)` or
/// `G(n, m-1)`.
///
/// Throws ParseError and ResolutionError with `line:col` positions; errors
/// from space validation are rethrown with the position of the declaration.
ModelDocument parse_model(std::string_view text);

/// Canonical text; parse_model(print_model(d)) == d.
std::string print_model(const ModelDocument& doc);

/// Canonical text of a finite subset, e.g. `{1 3}`.
std::string print_subset(const FinitePretop& x, Subset s);
/// Parses `{a b}` against the space's point names. Throws ParseError or
/// ResolutionError.
Subset parse_subset(std::string_view text, const std::vector<std::string>& names);

}  // namespace pretop::model
