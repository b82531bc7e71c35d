#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "pretop/def_set.hpp"

namespace pretop {

/// Resolves a bare identifier inside a set literal to a previously named set.
using SetResolver = std::function<std::optional<DefSet>(const std::string&)>;

/// Parses the set-literal syntax:
///
///   expr    := inter (('|' | '\') inter)*
///   inter   := unary ('&' unary)*
///   unary   := '~' unary | primary
///   primary := 'empty' | 'all' | '(' expr ')' | NAME
///            | 'atom' '(' NAME ')'
///            | 'ray' '(' NAME [';' range] ')'
///            | 'grid' '(' NAME (';' cond)* ')'
///   cond    := ('rows' | 'cols') (CMP INT | 'in' range)
///   range   := INT | INT '..' | '..' INT | INT '..' INT | CMP INT
///            | '{' range (',' range)* '}'
///   CMP     := '<' | '<=' | '>' | '>=' | '=' | '!='
///
/// Throws ParseError (with a column offset) or ResolutionError.
DefSet parse_set_literal(std::string_view text, const SchemaPtr& schema,
                         const SetResolver& resolver = {});

/// Canonical literal text; parse_set_literal(print_set_literal(s)) == s.
std::string print_set_literal(const DefSet& s);

std::string print_point(const GroundSchema& schema, const Point& p);
/// Accepts `name`, `R[3]` and `G(4,-1)`.
Point parse_point(std::string_view text, const GroundSchema& schema);

}  // namespace pretop
