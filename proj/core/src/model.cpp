#include "pretop/model.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <sstream>

#include "pretop/errors.hpp"
#include "pretop/set_literal.hpp"

namespace pretop::model {

const std::string& decl_name(const Decl& d) {
  return std::visit([](const auto& v) -> const std::string& { return v.name; }, d);
}

const Decl* ModelDocument::find(const std::string& name) const {
  for (const Decl& d : decls_) {
    if (decl_name(d) == name) return &d;
  }
  return nullptr;
}

namespace {

template <typename T>
const T& lookup(const ModelDocument& doc, const std::string& name, const char* kind) {
  const Decl* d = doc.find(name);
  if (!d) fail(ErrorKind::ResolutionError, "unknown name '" + name + "'");
  const T* v = std::get_if<T>(d);
  if (!v) fail(ErrorKind::ResolutionError, "'" + name + "' is not a " + kind);
  return *v;
}

}  // namespace

const FinitePretop& ModelDocument::finite_space(const std::string& name) const {
  return lookup<SpaceDecl>(*this, name, "finite space").space;
}

const FiniteTopology& ModelDocument::topology(const std::string& name) const {
  return lookup<TopologyDecl>(*this, name, "topology").topology;
}

const BuiltinDecl& ModelDocument::builtin(const std::string& name) const {
  return lookup<BuiltinDecl>(*this, name, "symbolic space");
}

const sym::SymbolicPretop& ModelDocument::symbolic_space(const std::string& name) const {
  return builtin(name).value;
}

const MapDecl& ModelDocument::map_decl(const std::string& name) const {
  return lookup<MapDecl>(*this, name, "map");
}

FiniteMap ModelDocument::finite_map(const std::string& name) const {
  const MapDecl& m = map_decl(name);
  if (m.symbolic()) fail(ErrorKind::ResolutionError, "'" + name + "' is a symbolic map");
  return FiniteMap::make(finite_space(m.source), finite_space(m.target), m.table);
}

sym::SymMap ModelDocument::symbolic_map(const std::string& name) const {
  const MapDecl& m = map_decl(name);
  if (!m.symbolic()) fail(ErrorKind::ResolutionError, "'" + name + "' is a finite map");
  return sym::SymMap::make(symbolic_space(m.source), symbolic_space(m.target), m.strands);
}

const SetDecl& ModelDocument::set(const std::string& name) const {
  return lookup<SetDecl>(*this, name, "set");
}

Extension ModelDocument::extension(const std::string& name) const {
  const ExtensionDecl& e = lookup<ExtensionDecl>(*this, name, "extension");
  return make_extension(finite_space(e.space), e.base);
}

std::vector<std::string> ModelDocument::space_names() const {
  std::vector<std::string> out;
  for (const Decl& d : decls_) {
    if (std::holds_alternative<SpaceDecl>(d) || std::holds_alternative<BuiltinDecl>(d)) out.push_back(decl_name(d));
  }
  return out;
}

void ModelDocument::add(Decl d) {
  if (find(decl_name(d))) fail(ErrorKind::ResolutionError, "name '" + decl_name(d) + "' declared twice");
  decls_.push_back(std::move(d));
}

std::string print_subset(const FinitePretop& x, Subset s) {
  std::string out = "{";
  bool first = true;
  for (int p : s.elements()) {
    if (!first) out += ' ';
    out += x.name(p);
    first = false;
  }
  return out + "}";
}

namespace {

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.' || c == '*' || c == '+';
}

struct Pos {
  int line = 1;
  int col = 1;

  std::string text() const { return std::to_string(line) + ":" + std::to_string(col); }
};

[[noreturn]] void fail_at(ErrorKind kind, const Pos& at, const std::string& msg) {
  fail(kind, "line " + at.text() + ": " + msg);
}

// Rethrows an error with the declaration's position. Positions relative to
// a sub-parser's input (`col N` or `line L:C`) are shifted to `at`.
[[noreturn]] void relocate(const Error& e, const Pos& at) {
  std::string msg = e.what();
  const std::string prefix = std::string(to_string(e.kind())) + ": ";
  if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
  Pos where = at;
  int line = 1, col = 0, used = 0;
  if (std::sscanf(msg.c_str(), "col %d: %n", &col, &used) == 1 && used > 0) {
    where.col += col - 1;
    msg = msg.substr(used);
  } else if (std::sscanf(msg.c_str(), "line %d:%d: %n", &line, &col, &used) == 2 && used > 0) {
    where.line += line - 1;
    where.col = line == 1 ? at.col + col - 1 : col;
    msg = msg.substr(used);
  }
  fail_at(e.kind(), where, msg);
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip() {
    while (i_ < text_.size()) {
      const char c = text_[i_];
      if (c == '#') {
        while (i_ < text_.size() && text_[i_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool done() {
    skip();
    return i_ >= text_.size();
  }

  Pos pos() {
    skip();
    return pos_;
  }

  char peek() {
    skip();
    return i_ < text_.size() ? text_[i_] : '\0';
  }

  bool peek_arrow() {
    skip();
    return text_.substr(i_, 2) == "->";
  }

  [[noreturn]] void error(const std::string& msg) { fail_at(ErrorKind::ParseError, pos(), msg); }

  void expect(char c) {
    if (peek() != c) error(std::string("expected '") + c + "'");
    advance();
  }

  void expect_arrow() {
    if (!peek_arrow()) error("expected '->'");
    advance();
    advance();
  }

  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  std::string word() {
    skip();
    const std::size_t start = i_;
    while (i_ < text_.size()) {
      const char c = text_[i_];
      const bool dash = c == '-' && text_.substr(i_, 2) != "->";
      if (!name_char(c) && !dash) break;
      advance();
    }
    if (start == i_) error("expected a name");
    return std::string(text_.substr(start, i_ - start));
  }

  void keyword(const char* kw) {
    const Pos at = pos();
    if (word() != kw) fail_at(ErrorKind::ParseError, at, std::string("expected '") + kw + "'");
  }

  bool at_word(const char* kw) {
    skip();
    const std::size_t n = std::char_traits<char>::length(kw);
    return text_.substr(i_, n) == kw && (i_ + n >= text_.size() || !name_char(text_[i_ + n]));
  }

  // Raw text up to the next ';' outside brackets; the ';' is consumed.
  std::string until_semicolon() {
    skip();
    int depth = 0;
    const std::size_t start = i_;
    while (i_ < text_.size()) {
      const char c = text_[i_];
      if (c == '(' || c == '{' || c == '[') ++depth;
      if (c == ')' || c == '}' || c == ']') --depth;
      if (c == ';' && depth == 0) break;
      if (c == '\n' && depth == 0) break;
      advance();
    }
    if (i_ >= text_.size() || text_[i_] != ';') error("expected ';'");
    std::string out(text_.substr(start, i_ - start));
    advance();
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
    return out;
  }

  std::vector<std::string> braced_names() {
    expect('{');
    std::vector<std::string> out;
    while (peek() != '}') {
      if (peek() == '\0') error("unterminated '{'");
      out.push_back(word());
    }
    expect('}');
    return out;
  }

 private:
  void advance() {
    if (text_[i_] == '\n') {
      ++pos_.line;
      pos_.col = 1;
    } else {
      ++pos_.col;
    }
    ++i_;
  }

  std::string_view text_;
  std::size_t i_ = 0;
  Pos pos_;
};

int index_in(const std::vector<std::string>& names, const std::string& n, const Pos& at) {
  auto it = std::find(names.begin(), names.end(), n);
  if (it == names.end()) fail_at(ErrorKind::ResolutionError, at, "unknown point '" + n + "'");
  return static_cast<int>(it - names.begin());
}

Subset subset_of(const std::vector<std::string>& names, const std::vector<std::string>& items, const Pos& at) {
  Subset s;
  for (const std::string& n : items) s = s | Subset::single(index_in(names, n, at));
  return s;
}

std::vector<std::string> point_list(Cursor& c) {
  c.keyword("points");
  c.expect(':');
  std::vector<std::string> names;
  while (c.peek() != ';') {
    const Pos at = c.pos();
    std::string n = c.word();
    if (std::find(names.begin(), names.end(), n) != names.end()) {
      fail_at(ErrorKind::ResolutionError, at, "point '" + n + "' listed twice");
    }
    names.push_back(std::move(n));
  }
  c.expect(';');
  return names;
}

SpaceDecl parse_space(Cursor& c, const Pos& at) {
  SpaceDecl d;
  d.name = c.word();
  c.expect('{');
  const std::vector<std::string> names = point_list(c);
  std::vector<Subset> vic(names.size());
  std::vector<bool> given(names.size(), false);
  for (std::size_t i = 0; i < names.size(); ++i) vic[i] = Subset::single(static_cast<int>(i));
  while (!c.accept('}')) {
    c.keyword("vicinity");
    const Pos pat = c.pos();
    const int p = index_in(names, c.word(), pat);
    if (given[p]) fail_at(ErrorKind::ResolutionError, pat, "vicinity of '" + names[p] + "' given twice");
    given[p] = true;
    c.expect(':');
    const Pos sat = c.pos();
    vic[p] = subset_of(names, c.braced_names(), sat);
    c.expect(';');
  }
  c.accept(';');
  try {
    d.space = FinitePretop::validate(names, std::move(vic));
  } catch (const Error& e) {
    relocate(e, at);
  }
  return d;
}

TopologyDecl parse_topology(Cursor& c, const Pos& at) {
  TopologyDecl d;
  d.name = c.word();
  c.expect('{');
  const std::vector<std::string> names = point_list(c);
  c.keyword("opens");
  c.expect(':');
  std::vector<Subset> opens;
  while (c.peek() == '{') {
    const Pos sat = c.pos();
    opens.push_back(subset_of(names, c.braced_names(), sat));
  }
  c.expect(';');
  c.expect('}');
  c.accept(';');
  try {
    d.topology = FiniteTopology::make(names, std::move(opens));
  } catch (const Error& e) {
    relocate(e, at);
  }
  return d;
}

Coord parse_int(std::string_view t, const Pos& at) {
  Coord v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    fail_at(ErrorKind::ParseError, at, "expected an integer, got '" + std::string(t) + "'");
  }
  return v;
}

// `[INT['*']] VAR [(+|-) INT]`
std::pair<Coord, Coord> parse_coord_map(std::string t, char var, const Pos& at) {
  t.erase(std::remove_if(t.begin(), t.end(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); }),
          t.end());
  const std::size_t v = t.find(var);
  if (v == std::string::npos) fail_at(ErrorKind::ParseError, at, std::string("expected '") + var + "' in '" + t + "'");
  std::string scale = t.substr(0, v);
  if (!scale.empty() && scale.back() == '*') scale.pop_back();
  const Coord s = scale.empty() ? 1 : parse_int(scale, at);
  std::string rest = t.substr(v + 1);
  if (!rest.empty() && rest.front() == '+') rest.erase(0, 1);
  const Coord shift = rest.empty() ? 0 : parse_int(rest, at);
  return {s, shift};
}

sym::StrandMap parse_strand_image(const std::string& src, const std::string& image, const GroundSchema& gs,
                                  const GroundSchema& gt, const Pos& at) {
  const auto s = gs.find(src);
  if (!s) fail_at(ErrorKind::ResolutionError, at, "unknown strand '" + src + "'");
  const std::size_t open = image.find('(');
  const std::string head = image.substr(0, open);
  const auto t = gt.find(head);
  const bool coordinate = gs.arity(*s) > 0 && t && gt.arity(*t) > 0 &&
                          (open == std::string::npos || image.find_first_of("nm", open) != std::string::npos);
  if (!coordinate) {
    try {
      return sym::StrandMap::to_point(src, parse_point(image, gt));
    } catch (const Error& e) {
      relocate(e, at);
    }
  }
  if (open == std::string::npos) return sym::StrandMap::affine(src, head);
  if (image.back() != ')') fail_at(ErrorKind::ParseError, at, "expected ')' in '" + image + "'");
  const std::string inner = image.substr(open + 1, image.size() - open - 2);
  const std::size_t comma = inner.find(',');
  sym::StrandMap m = sym::StrandMap::affine(src, head);
  std::tie(m.scale[0], m.shift[0]) = parse_coord_map(inner.substr(0, comma), 'n', at);
  if (comma != std::string::npos) std::tie(m.scale[1], m.shift[1]) = parse_coord_map(inner.substr(comma + 1), 'm', at);
  return m;
}

MapDecl parse_map(Cursor& c, const ModelDocument& doc, const Pos& at) {
  MapDecl d;
  d.name = c.word();
  c.expect(':');
  Pos nat = c.pos();
  d.source = c.word();
  c.expect_arrow();
  d.target = c.word();
  c.expect('{');
  const Decl* src = doc.find(d.source);
  const Decl* tgt = doc.find(d.target);
  if (!src) fail_at(ErrorKind::ResolutionError, nat, "unknown space '" + d.source + "'");
  if (!tgt) fail_at(ErrorKind::ResolutionError, nat, "unknown space '" + d.target + "'");
  try {
    if (std::holds_alternative<SpaceDecl>(*src)) {
      const FinitePretop& x = doc.finite_space(d.source);
      const FinitePretop& y = doc.finite_space(d.target);
      std::vector<int> table(x.size(), -1);
      while (!c.accept('}')) {
        const Pos eat = c.pos();
        const int p = index_in(x.names(), c.word(), eat);
        c.expect_arrow();
        const int q = index_in(y.names(), c.word(), c.pos());
        if (table[p] >= 0) fail_at(ErrorKind::ResolutionError, eat, "image of '" + x.name(p) + "' given twice");
        table[p] = q;
        c.expect(';');
      }
      for (int p = 0; p < x.size(); ++p) {
        if (table[p] < 0) fail_at(ErrorKind::ResolutionError, at, "no image for '" + x.name(p) + "'");
      }
      d.table = std::move(table);
      FiniteMap::make(x, y, d.table);
    } else {
      const sym::SymbolicPretop& x = doc.symbolic_space(d.source);
      const sym::SymbolicPretop& y = doc.symbolic_space(d.target);
      while (!c.accept('}')) {
        const Pos eat = c.pos();
        const std::string from = c.word();
        c.expect_arrow();
        d.strands.push_back(parse_strand_image(from, c.until_semicolon(), *x.schema(), *y.schema(), eat));
      }
      if (d.strands.empty()) fail_at(ErrorKind::ParseError, at, "symbolic map without entries");
      sym::SymMap::make(x, y, d.strands);
    }
  } catch (const Error& e) {
    if (std::string(e.what()).find("line ") != std::string::npos) throw;
    relocate(e, at);
  }
  c.accept(';');
  return d;
}

void evaluate(BuiltinDecl& d, const ModelDocument& doc) {
  auto arg = [&](std::size_t i) -> const std::string& { return d.args.at(i); };
  if (d.op == "urysohn" || d.op == "half_grid" || d.op == "discrete_ray") {
    d.value = d.op == "discrete_ray" ? sym::builtin(d.op + "(" + std::to_string(d.param) + ")") : sym::builtin(d.op);
  } else if (d.op == "regularize") {
    d.value = sym::sym_regularize(doc.symbolic_space(arg(0)));
  } else if (d.op == "end_extension" || d.op == "one_point") {
    const sym::SymbolicPretop& x = doc.symbolic_space(arg(0));
    d.extension = d.op == "end_extension" ? sym::end_extension(x) : sym::one_point_compactification(x);
    d.value = d.extension->space;
  } else if (d.op == "restrict") {
    const SetDecl& s = doc.set(arg(1));
    if (s.space != arg(0)) fail(ErrorKind::ResolutionError, "set '" + arg(1) + "' is not on '" + arg(0) + "'");
    d.value = sym::sym_restrict(doc.symbolic_space(arg(0)), std::get<DefSet>(s.value));
  } else if (d.op == "lift") {
    d.value = sym::from_finite(doc.finite_space(arg(0)));
  } else {
    fail(ErrorKind::UnknownBuiltin, d.op);
  }
}

std::size_t arity_of(const std::string& op) {
  if (op == "urysohn" || op == "half_grid") return 0;
  if (op == "restrict") return 2;
  return 1;
}

BuiltinDecl parse_builtin(Cursor& c, const ModelDocument& doc, const Pos& at) {
  BuiltinDecl d;
  d.name = c.word();
  c.expect('=');
  const Pos oat = c.pos();
  d.op = c.word();
  static const std::vector<std::string> known{"urysohn", "half_grid", "discrete_ray", "regularize",
                                               "end_extension", "one_point", "restrict", "lift"};
  if (std::find(known.begin(), known.end(), d.op) == known.end()) {
    fail_at(ErrorKind::UnknownBuiltin, oat, "'" + d.op + "'");
  }
  if (c.accept('(')) {
    while (true) {
      if (d.op == "discrete_ray") {
        const Pos iat = c.pos();
        d.param = static_cast<int>(parse_int(c.word(), iat));
      } else {
        d.args.push_back(c.word());
      }
      if (c.accept(')')) break;
      c.expect(',');
    }
  }
  c.expect(';');
  const std::size_t want = arity_of(d.op);
  const std::size_t got = d.op == "discrete_ray" ? (d.param != 0 ? 1 : 0) : d.args.size();
  if (got != want) fail_at(ErrorKind::ParseError, oat, d.op + " takes " + std::to_string(want) + " argument(s)");
  try {
    evaluate(d, doc);
  } catch (const Error& e) {
    relocate(e, at);
  }
  return d;
}

SetDecl parse_set(Cursor& c, const ModelDocument& doc, const Pos& at, const std::string& last_space) {
  SetDecl d;
  d.name = c.word();
  if (c.at_word("in")) {
    c.word();
    d.space = c.word();
  } else {
    d.space = last_space;
  }
  if (d.space.empty()) fail_at(ErrorKind::ResolutionError, at, "set '" + d.name + "' has no space");
  c.expect('=');
  const Pos lat = c.pos();
  const std::string text = c.until_semicolon();
  try {
    const Decl* sp = doc.find(d.space);
    if (!sp) fail(ErrorKind::ResolutionError, "unknown space '" + d.space + "'");
    if (std::holds_alternative<SpaceDecl>(*sp)) {
      const FinitePretop& x = doc.finite_space(d.space);
      const Decl* named = doc.find(text);
      if (named && std::holds_alternative<SetDecl>(*named) && std::get<SetDecl>(*named).space == d.space) {
        d.value = std::get<SetDecl>(*named).value;
      } else {
        d.value = parse_subset(text, x.names());
      }
    } else {
      const sym::SymbolicPretop& x = doc.symbolic_space(d.space);
      SetResolver resolve = [&](const std::string& n) -> std::optional<DefSet> {
        const Decl* s = doc.find(n);
        if (!s || !std::holds_alternative<SetDecl>(*s)) return std::nullopt;
        const SetDecl& sd = std::get<SetDecl>(*s);
        if (sd.space != d.space) return std::nullopt;
        return std::get<DefSet>(sd.value);
      };
      d.value = parse_set_literal(text, x.schema(), resolve);
    }
  } catch (const Error& e) {
    relocate(e, lat);
  }
  return d;
}

ExtensionDecl parse_extension(Cursor& c, const ModelDocument& doc, const Pos& at) {
  ExtensionDecl d;
  d.name = c.word();
  c.expect('=');
  d.space = c.word();
  c.keyword("over");
  const Pos bat = c.pos();
  try {
    const FinitePretop& y = doc.finite_space(d.space);
    if (c.peek() == '{') {
      d.base = subset_of(y.names(), c.braced_names(), bat);
    } else {
      const SetDecl& s = doc.set(c.word());
      if (s.space != d.space) fail(ErrorKind::ResolutionError, "base set is not on '" + d.space + "'");
      d.base = std::get<Subset>(s.value);
    }
    make_extension(y, d.base);
  } catch (const Error& e) {
    if (std::string(e.what()).find("line ") != std::string::npos) throw;
    relocate(e, at);
  }
  c.expect(';');
  return d;
}

}  // namespace

Subset parse_subset(std::string_view text, const std::vector<std::string>& names) {
  Cursor c(text);
  const Pos at = c.pos();
  if (c.peek() != '{') fail_at(ErrorKind::ParseError, at, "expected '{' in finite set '" + std::string(text) + "'");
  const Subset s = subset_of(names, c.braced_names(), at);
  if (!c.done()) c.error("trailing text after finite set");
  return s;
}

ModelDocument parse_model(std::string_view text) {
  Cursor c(text);
  ModelDocument doc;
  std::string last_space;
  while (!c.done()) {
    const Pos at = c.pos();
    const std::string kw = c.word();
    Decl d;
    if (kw == "space") {
      d = parse_space(c, at);
    } else if (kw == "topology") {
      d = parse_topology(c, at);
    } else if (kw == "map") {
      d = parse_map(c, doc, at);
    } else if (kw == "builtin") {
      d = parse_builtin(c, doc, at);
    } else if (kw == "set") {
      d = parse_set(c, doc, at, last_space);
    } else if (kw == "extension") {
      d = parse_extension(c, doc, at);
    } else {
      fail_at(ErrorKind::ParseError, at, "unknown statement '" + kw + "'");
    }
    if (std::holds_alternative<SpaceDecl>(d) || std::holds_alternative<BuiltinDecl>(d)) last_space = decl_name(d);
    try {
      doc.add(std::move(d));
    } catch (const Error& e) {
      relocate(e, at);
    }
  }
  return doc;
}

namespace {

std::string coord_text(const char* var, Coord scale, Coord shift) {
  std::string s = scale == 1 ? var : std::to_string(scale) + var;
  if (shift > 0) s += "+" + std::to_string(shift);
  if (shift < 0) s += std::to_string(shift);
  return s;
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const std::string& s : v) out += (out.empty() ? "" : " ") + s;
  return out;
}

std::string names_of(const std::vector<std::string>& names, Subset s) {
  std::vector<std::string> out;
  for (int p : s.elements()) out.push_back(names[p]);
  return "{" + join(out) + "}";
}

}  // namespace

std::string print_model(const ModelDocument& doc) {
  std::ostringstream os;
  bool first = true;
  for (const Decl& d : doc.decls()) {
    if (!first) os << "\n";
    first = false;
    if (const auto* s = std::get_if<SpaceDecl>(&d)) {
      os << "space " << s->name << " {\n  points: " << join(s->space.names()) << ";\n";
      for (int p = 0; p < s->space.size(); ++p) {
        os << "  vicinity " << s->space.name(p) << ": " << print_subset(s->space, s->space.min_vicinity(p)) << ";\n";
      }
      os << "}\n";
    } else if (const auto* t = std::get_if<TopologyDecl>(&d)) {
      os << "topology " << t->name << " {\n  points: " << join(t->topology.names()) << ";\n  opens:";
      for (Subset u : t->topology.opens()) os << " " << names_of(t->topology.names(), u);
      os << ";\n}\n";
    } else if (const auto* m = std::get_if<MapDecl>(&d)) {
      os << "map " << m->name << ": " << m->source << " -> " << m->target << " {\n";
      if (!m->symbolic()) {
        const FinitePretop& x = doc.finite_space(m->source);
        const FinitePretop& y = doc.finite_space(m->target);
        for (int p = 0; p < x.size(); ++p) os << "  " << x.name(p) << " -> " << y.name(m->table[p]) << ";\n";
      } else {
        const sym::SymbolicPretop& x = doc.symbolic_space(m->source);
        const sym::SymbolicPretop& y = doc.symbolic_space(m->target);
        for (const sym::StrandMap& e : m->strands) {
          os << "  " << e.source << " -> ";
          if (e.constant) {
            os << print_point(*y.schema(), *e.constant);
          } else {
            os << e.target << "(" << coord_text("n", e.scale[0], e.shift[0]);
            if (x.schema()->arity(*x.schema()->find(e.source)) == 2) {
              os << ", " << coord_text("m", e.scale[1], e.shift[1]);
            }
            os << ")";
          }
          os << ";\n";
        }
      }
      os << "}\n";
    } else if (const auto* b = std::get_if<BuiltinDecl>(&d)) {
      os << "builtin " << b->name << " = " << b->op;
      if (b->op == "discrete_ray") {
        os << "(" << b->param << ")";
      } else if (!b->args.empty()) {
        os << "(";
        for (std::size_t i = 0; i < b->args.size(); ++i) os << (i ? ", " : "") << b->args[i];
        os << ")";
      }
      os << ";\n";
    } else if (const auto* st = std::get_if<SetDecl>(&d)) {
      os << "set " << st->name << " in " << st->space << " = ";
      if (const auto* sub = std::get_if<Subset>(&st->value)) {
        os << print_subset(doc.finite_space(st->space), *sub);
      } else {
        os << print_set_literal(std::get<DefSet>(st->value));
      }
      os << ";\n";
    } else if (const auto* e = std::get_if<ExtensionDecl>(&d)) {
      os << "extension " << e->name << " = " << e->space << " over "
         << print_subset(doc.finite_space(e->space), e->base) << ";\n";
    }
  }
  return os.str();
}

}  // namespace pretop::model
