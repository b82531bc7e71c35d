#include "pretop/set_literal.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

#include "pretop/errors.hpp"

namespace pretop {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const SchemaPtr& schema, const SetResolver& resolver)
      : text_(text), schema_(schema), resolver_(resolver) {}

  DefSet parse() {
    DefSet s = expr();
    skip_ws();
    if (pos_ != text_.size()) error("unexpected trailing input");
    return s;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::ParseError, "col " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(std::string_view tok) {
    skip_ws();
    return text_.substr(pos_, tok.size()) == tok;
  }

  bool accept(std::string_view tok) {
    if (!peek(tok)) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) error("expected '" + std::string(tok) + "'");
  }

  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    }
    if (start == pos_) error("expected identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  bool peek_int() {
    skip_ws();
    std::size_t p = pos_;
    if (p < text_.size() && (text_[p] == '-' || text_[p] == '+')) ++p;
    return p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]));
  }

  Coord integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string_view digits = text_.substr(start, pos_ - start);
    if (!digits.empty() && digits[0] == '+') digits.remove_prefix(1);
    Coord v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      pos_ = start;
      error("expected integer");
    }
    if (v <= -kCoordLimit || v >= kCoordLimit) error("integer out of range");
    return v;
  }

  DefSet expr() {
    DefSet acc = inter();
    for (;;) {
      if (accept("|")) {
        acc = acc.unite(inter());
      } else if (accept("\\")) {
        acc = acc.difference(inter());
      } else {
        return acc;
      }
    }
  }

  DefSet inter() {
    DefSet acc = unary();
    while (accept("&")) acc = acc.intersect(unary());
    return acc;
  }

  DefSet unary() {
    if (accept("~")) return unary().complement();
    return primary();
  }

  StrandRef strand_of(const std::string& name, StrandKind kind) {
    auto s = schema_->find(name);
    if (!s || s->kind != kind) fail(ErrorKind::ResolutionError, "no such strand '" + name + "'");
    return *s;
  }

  DefSet primary() {
    if (accept("(")) {
      DefSet s = expr();
      expect(")");
      return s;
    }
    std::size_t save = pos_;
    std::string word = ident();
    if (word == "empty") return DefSet::empty(schema_);
    if (word == "all") return DefSet::full(schema_);
    if ((word == "atom" || word == "ray" || word == "grid") && accept("(")) {
      std::string name = ident();
      if (word == "atom") {
        StrandRef s = strand_of(name, StrandKind::atom);
        expect(")");
        return DefSet::atom(schema_, s.index);
      }
      if (word == "ray") {
        StrandRef s = strand_of(name, StrandKind::ray);
        const Axis& ax = schema_->rays()[s.index].axis;
        IntervalSet sel = IntervalSet::full(ax);
        if (accept(";")) sel = range(ax);
        expect(")");
        return DefSet::ray(schema_, s.index, sel);
      }
      StrandRef s = strand_of(name, StrandKind::grid);
      const GridDecl& g = schema_->grids()[s.index];
      IntervalSet rows = IntervalSet::full(g.rows);
      IntervalSet cols = IntervalSet::full(g.cols);
      while (accept(";")) {
        std::string axis = ident();
        if (axis == "rows") {
          rows = rows.intersect(condition(g.rows));
        } else if (axis == "cols") {
          cols = cols.intersect(condition(g.cols));
        } else {
          error("expected 'rows' or 'cols'");
        }
      }
      expect(")");
      return DefSet::grid(schema_, s.index, rows, cols);
    }
    if (resolver_) {
      if (auto named = resolver_(word)) return *named;
    }
    pos_ = save;
    fail(ErrorKind::ResolutionError, "unknown set name '" + word + "'");
  }

  IntervalSet condition(const Axis& ax) {
    skip_ws();
    if (peek("in") && pos_ + 2 < text_.size() && !ident_char(text_[pos_ + 2])) {
      pos_ += 2;
      return range(ax);
    }
    if (auto cmp = comparison(ax)) return *cmp;
    error("expected comparison or 'in'");
  }

  std::optional<IntervalSet> comparison(const Axis& ax) {
    if (accept("<=")) return IntervalSet::make(ax, {{kNegInf, integer()}});
    if (accept(">=")) return IntervalSet::make(ax, {{integer(), kPosInf}});
    if (accept("!=")) return IntervalSet::point(ax, integer()).complement();
    if (accept("<")) return IntervalSet::make(ax, {{kNegInf, integer() - 1}});
    if (accept(">")) return IntervalSet::make(ax, {{integer() + 1, kPosInf}});
    if (accept("=")) return IntervalSet::point(ax, integer());
    return std::nullopt;
  }

  IntervalSet range(const Axis& ax) {
    if (accept("{")) {
      IntervalSet acc(ax);
      do {
        acc = acc.unite(range(ax));
      } while (accept(","));
      expect("}");
      return acc;
    }
    if (auto cmp = comparison(ax)) return *cmp;
    if (accept("..")) return IntervalSet::make(ax, {{kNegInf, integer()}});
    Coord lo = integer();
    if (accept("..")) {
      if (peek_int()) {
        Coord hi = integer();
        if (lo > hi) error("empty range");
        return IntervalSet::make(ax, {{lo, hi}});
      }
      return IntervalSet::make(ax, {{lo, kPosInf}});
    }
    return IntervalSet::point(ax, lo);
  }

  std::string_view text_;
  const SchemaPtr& schema_;
  const SetResolver& resolver_;
  std::size_t pos_ = 0;
};

std::string range_item(const Axis& ax, const Interval& iv) {
  bool open_lo = iv.lo == kNegInf || iv.lo == ax.min();
  if (iv.lo == iv.hi) return std::to_string(iv.lo);
  if (iv.hi == kPosInf) return std::to_string(iv.lo) + "..";
  if (open_lo && iv.lo == kNegInf) return ".." + std::to_string(iv.hi);
  return std::to_string(iv.lo) + ".." + std::to_string(iv.hi);
}

std::string range_text(const IntervalSet& s) {
  const auto& ivs = s.intervals();
  if (ivs.size() == 1) return range_item(s.axis(), ivs[0]);
  IntervalSet comp = s.complement();
  if (comp.intervals().size() == 1 && comp.intervals()[0].lo == comp.intervals()[0].hi) {
    return "!=" + std::to_string(comp.intervals()[0].lo);
  }
  std::string out = "{";
  for (std::size_t i = 0; i < ivs.size(); ++i) {
    if (i) out += ", ";
    out += range_item(s.axis(), ivs[i]);
  }
  return out + "}";
}

std::string condition_text(const char* axis, const IntervalSet& s) {
  const auto& ivs = s.intervals();
  std::string a = axis;
  if (ivs.size() == 1) {
    const Interval& iv = ivs[0];
    bool open_lo = iv.lo == kNegInf || iv.lo == s.axis().min();
    if (iv.lo == iv.hi) return a + "=" + std::to_string(iv.lo);
    if (iv.hi == kPosInf) return a + ">=" + std::to_string(iv.lo);
    if (open_lo) return a + "<=" + std::to_string(iv.hi);
    return a + " in " + std::to_string(iv.lo) + ".." + std::to_string(iv.hi);
  }
  std::string r = range_text(s);
  if (r.starts_with("!=")) return a + r;
  return a + " in " + r;
}

}  // namespace

DefSet parse_set_literal(std::string_view text, const SchemaPtr& schema, const SetResolver& resolver) {
  if (!schema) fail(ErrorKind::SchemaMismatch, "no schema for set literal");
  return Parser(text, schema, resolver).parse();
}

std::string print_set_literal(const DefSet& s) {
  const GroundSchema& sc = *s.schema();
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < sc.atoms().size(); ++i) {
    if (s.has_atom(i)) parts.push_back("atom(" + sc.atoms()[i] + ")");
  }
  for (std::size_t i = 0; i < sc.rays().size(); ++i) {
    const IntervalSet& r = s.ray_set(i);
    if (r.empty()) continue;
    if (r.is_full()) {
      parts.push_back("ray(" + sc.rays()[i].name + ")");
    } else {
      parts.push_back("ray(" + sc.rays()[i].name + "; " + range_text(r) + ")");
    }
  }
  for (std::size_t i = 0; i < sc.grids().size(); ++i) {
    for (const Rect& rect : s.grid_rects(i)) {
      std::string lit = "grid(" + sc.grids()[i].name;
      if (!rect.rows.is_full()) lit += "; " + condition_text("rows", rect.rows);
      if (!rect.cols.is_full()) lit += "; " + condition_text("cols", rect.cols);
      parts.push_back(lit + ")");
    }
  }
  if (parts.empty()) return "empty";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " | ";
    out += parts[i];
  }
  return out;
}

std::string print_point(const GroundSchema& schema, const Point& p) {
  const std::string& name = schema.name(p.strand);
  switch (p.strand.kind) {
    case StrandKind::atom: return name;
    case StrandKind::ray: return name + "[" + std::to_string(p.a) + "]";
    case StrandKind::grid: return name + "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
  }
  return name;
}

Point parse_point(std::string_view text, const GroundSchema& schema) {
  auto bad = [&] { fail(ErrorKind::ParseError, "malformed point '" + std::string(text) + "'"); };
  std::size_t cut = text.find_first_of("[(");
  std::string name(text.substr(0, cut));
  auto strand = schema.find(name);
  if (!strand) fail(ErrorKind::UnknownPoint, "no strand '" + name + "'");
  auto number = [&](std::string_view t) {
    Coord v = 0;
    while (!t.empty() && t.front() == ' ') t.remove_prefix(1);
    while (!t.empty() && t.back() == ' ') t.remove_suffix(1);
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) bad();
    return v;
  };
  Point p{*strand, 0, 0};
  if (strand->kind == StrandKind::atom) {
    if (cut != std::string_view::npos) bad();
  } else if (strand->kind == StrandKind::ray) {
    if (cut == std::string_view::npos || text[cut] != '[' || text.back() != ']') bad();
    p.a = number(text.substr(cut + 1, text.size() - cut - 2));
  } else {
    if (cut == std::string_view::npos || text[cut] != '(' || text.back() != ')') bad();
    std::string_view inner = text.substr(cut + 1, text.size() - cut - 2);
    std::size_t comma = inner.find(',');
    if (comma == std::string_view::npos) bad();
    p.a = number(inner.substr(0, comma));
    p.b = number(inner.substr(comma + 1));
  }
  return p;
}

}  // namespace pretop
