#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "pretop/constructions.hpp"
#include "pretop/end_extension.hpp"
#include "pretop/finite_pretop.hpp"
#include "pretop/map_analysis.hpp"
#include "pretop/model.hpp"
#include "pretop/regularization.hpp"
#include "pretop/set_literal.hpp"
#include "pretop/symbolic_map.hpp"
#include "pretop/symbolic_pretop.hpp"
#include "pretop/traces.hpp"

#ifndef PRETOP_VERSION
#define PRETOP_VERSION "0.0.0"
#endif

namespace pretop::cli {

namespace {

using model::ModelDocument;

struct Options {
  std::string command;
  std::string op;
  std::string file;
  std::string space;
  std::string map;
  std::string set;
  std::string filter;
  std::string method;
  std::string compute;
  int iterations = 1;
  bool as_json = false;
  int max_points = 3;
  std::uint64_t seed = 1;
  int workers = 1;
  int samples = 64;
  std::vector<std::string> suites;
};

/// What a handler reports: `holds` drives exit code 1.
struct Outcome {
  json result;
  json witness;
  std::string text;
  std::string witness_text;
  bool holds = true;
};

[[noreturn]] void usage(const std::string& msg) { fail(ErrorKind::ParseError, msg); }
[[noreturn]] void unresolved(const std::string& msg) { fail(ErrorKind::ResolutionError, msg); }

// --- formatting -------------------------------------------------------------

json names_of(const FinitePretop& x, Subset s) {
  json out = json::array();
  for (int i : s.elements()) out.push_back(x.name(i));
  return out;
}

std::string set_text(const FinitePretop& x, Subset s) { return model::print_subset(x, s); }

json vicinity_json(const FinitePretop& x) {
  json out = json::object();
  for (int i = 0; i < x.size(); ++i) out[x.name(i)] = names_of(x, x.min_vicinity(i));
  return out;
}

std::string vicinity_text(const FinitePretop& x) {
  std::string out;
  for (int i = 0; i < x.size(); ++i) {
    if (i) out += '\n';
    out += x.name(i) + ": " + set_text(x, x.min_vicinity(i));
  }
  return out;
}

std::string cover_text(const FinitePretop& x, const std::vector<Subset>& cover) {
  std::string out;
  for (Subset s : cover) out += (out.empty() ? "" : " ") + set_text(x, s);
  return out;
}

json cover_json(const FinitePretop& x, const std::vector<Subset>& cover) {
  json out = json::array();
  for (Subset s : cover) out.push_back(names_of(x, s));
  return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

Outcome boolean(bool holds) {
  Outcome o;
  o.result = holds;
  o.text = yes_no(holds);
  o.holds = holds;
  return o;
}

Outcome finite_set_result(const FinitePretop& x, Subset s) {
  Outcome o;
  o.result = names_of(x, s);
  o.text = set_text(x, s);
  return o;
}

Outcome sym_set_result(const DefSet& s) {
  Outcome o;
  o.result = print_set_literal(s);
  o.text = print_set_literal(s);
  return o;
}

// --- subjects -----------------------------------------------------------------

struct Subject {
  std::string name;
  std::optional<FinitePretop> fin;
  std::optional<FiniteTopology> top;
  std::optional<sym::SymbolicPretop> sym;
  std::optional<Extension> ext;
  const ModelDocument* doc = nullptr;
};

ModelDocument load(const std::string& file) {
  if (file.empty()) usage("-f FILE is required");
  std::ifstream in(file, std::ios::binary);
  if (!in) unresolved("cannot read '" + file + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return model::parse_model(buf.str());
}

Subject subject_of(const ModelDocument& doc, std::string name) {
  if (name.empty()) {
    const auto spaces = doc.space_names();
    if (spaces.size() != 1) usage("--space is required when the file declares " + std::to_string(spaces.size()) + " spaces");
    name = spaces.front();
  }
  const model::Decl* d = doc.find(name);
  if (!d) unresolved("unknown space '" + name + "'");
  Subject s;
  s.name = name;
  s.doc = &doc;
  if (const auto* sp = std::get_if<model::SpaceDecl>(d)) {
    s.fin = sp->space;
  } else if (const auto* tp = std::get_if<model::TopologyDecl>(d)) {
    s.top = tp->topology;
    s.fin = tp->topology.neighbourhood_pretop();
  } else if (const auto* bp = std::get_if<model::BuiltinDecl>(d)) {
    s.sym = bp->value;
  } else if (std::holds_alternative<model::ExtensionDecl>(*d)) {
    s.ext = doc.extension(name);
    s.fin = s.ext->space;
  } else {
    unresolved("'" + name + "' is not a space");
  }
  return s;
}

Subset finite_set(const Subject& s, const std::string& text, const char* flag = "--set") {
  if (text.empty()) usage(std::string(flag) + " is required");
  if (text.front() == '{') return model::parse_subset(text, s.fin->names());
  if (s.doc) {
    const model::Decl* d = s.doc->find(text);
    if (d && std::holds_alternative<model::SetDecl>(*d)) {
      const auto& sd = std::get<model::SetDecl>(*d);
      if (sd.space == s.name && std::holds_alternative<Subset>(sd.value)) return std::get<Subset>(sd.value);
    }
  }
  unresolved("no set '" + text + "' in " + s.name);
}

DefSet sym_set(const sym::SymbolicPretop& x, const Subject& s, const std::string& text,
               const char* flag = "--set") {
  if (text.empty()) usage(std::string(flag) + " is required");
  SetResolver resolve = [&](const std::string& n) -> std::optional<DefSet> {
    if (!s.doc) return std::nullopt;
    const model::Decl* d = s.doc->find(n);
    if (!d || !std::holds_alternative<model::SetDecl>(*d)) return std::nullopt;
    const auto& sd = std::get<model::SetDecl>(*d);
    if (sd.space != s.name || !std::holds_alternative<DefSet>(sd.value)) return std::nullopt;
    return std::get<DefSet>(sd.value);
  };
  return parse_set_literal(text, x.schema(), resolve);
}

const FiniteTopology& topology_of(Subject& s) {
  if (s.top) return *s.top;
  if (!is_topological(*s.fin).topological) unresolved("'" + s.name + "' is not topological");
  s.top = FiniteTopology::from_pretop(*s.fin);
  return *s.top;
}

template <typename E>
E pick(const std::string& text, std::initializer_list<std::pair<const char*, E>> table, E fallback) {
  if (text.empty()) return fallback;
  std::string known;
  for (const auto& [name, value] : table) {
    if (text == name) return value;
    known += (known.empty() ? "" : ", ") + std::string(name);
  }
  usage("unknown method '" + text + "' (expected " + known + ")");
}

// --- compute ------------------------------------------------------------------

Outcome compute_finite(const Subject& s, const Options& o) {
  const FinitePretop& x = *s.fin;
  const int n = std::max(o.iterations, 0);
  if (o.op == "adh" || o.op == "inh" || o.op == "cl-theta") {
    Subset a = finite_set(s, o.set);
    const FinitePretop base = o.op == "cl-theta" ? partial_regularization(x) : x;
    for (int i = 0; i < n; ++i) a = o.op == "inh" ? base.inh(a) : base.adh(a);
    return finite_set_result(x, a);
  }
  if (o.op == "adh-filter") return finite_set_result(x, adh_filter(x, {finite_set(s, o.set)}));
  if (o.op == "vicinity" || o.op == "regularize") {
    const FinitePretop y = o.op == "regularize" ? partial_regularization(x) : x;
    Outcome out;
    out.result = vicinity_json(y);
    out.text = vicinity_text(y);
    return out;
  }
  if (o.op == "tower") {
    const FilterTower t = filter_tower(x, {finite_set(s, o.set)});
    Outcome out;
    json levels = json::array();
    for (std::size_t i = 0; i < t.levels.size(); ++i) {
      levels.push_back(names_of(x, t.levels[i]));
      out.text += "F" + std::to_string(i) + " = " + set_text(x, t.levels[i]) + "\n";
    }
    out.result = {{"levels", levels}, {"stabilized_at", t.stabilized_at}, {"open", t.open}, {"inherent", t.inherent}};
    out.text += "stabilized at " + std::to_string(t.stabilized_at) + ", open " + yes_no(t.open) + ", inherent " +
                yes_no(t.inherent);
    return out;
  }
  usage("unknown compute op '" + o.op + "' (finite: adh, inh, cl-theta, adh-filter, vicinity, regularize, tower)");
}

Outcome compute_sym(const Subject& s, const Options& o) {
  const sym::SymbolicPretop& x = *s.sym;
  const int n = std::max(o.iterations, 0);
  if (o.op == "cl-theta") return sym_set_result(sym::cl_theta(x, sym_set(x, s, o.set), n));
  if (o.op == "adh" || o.op == "inh") {
    DefSet a = sym_set(x, s, o.set);
    for (int i = 0; i < n; ++i) a = o.op == "adh" ? sym::sym_adh(x, a) : sym::sym_inh(x, a);
    return sym_set_result(a);
  }
  if (o.op == "describe" || o.op == "regularize") {
    Outcome out;
    out.text = o.op == "describe" ? x.describe() : sym::sym_regularize(x).describe();
    while (!out.text.empty() && out.text.back() == '\n') out.text.pop_back();
    out.result = out.text;
    return out;
  }
  usage("unknown compute op '" + o.op + "' (symbolic: adh, inh, cl-theta, describe, regularize)");
}

Outcome compute(const Subject& s, const Options& o) { return s.sym ? compute_sym(s, o) : compute_finite(s, o); }

// --- check --------------------------------------------------------------------

Outcome check_finite(Subject& s, const Options& o) {
  const FinitePretop& x = *s.fin;
  if (o.op == "hausdorff") {
    const HausdorffReport r = is_hausdorff(x);
    Outcome out = boolean(r.hausdorff);
    if (r.witness) {
      out.witness = {x.name(r.witness->first), x.name(r.witness->second)};
      out.witness_text = "(" + x.name(r.witness->first) + "," + x.name(r.witness->second) + ")";
    }
    return out;
  }
  if (o.op == "topological") {
    const TopologicalReport r = is_topological(x);
    Outcome out = boolean(r.topological);
    if (r.witness) {
      out.witness = names_of(x, *r.witness);
      out.witness_text = set_text(x, *r.witness);
    }
    return out;
  }
  if (o.op == "regular") {
    const RegularReport r = is_regular(x);
    Outcome out = boolean(r.regular);
    if (r.witness) out.witness = out.witness_text = x.name(*r.witness);
    return out;
  }
  if (o.op == "compact-at") {
    const Subset a = finite_set(s, o.set);
    const Subset k = o.filter.empty() ? x.points() : finite_set(s, o.filter, "--filter");
    const auto m = pick(o.method, {{"filter", CompactMethod::filter}, {"cover", CompactMethod::cover}},
                        CompactMethod::filter);
    const CompactAtReport r = compact_at(x, {k}, a, m);
    Outcome out = boolean(r.compact);
    if (r.failing_kernel) {
      out.witness = names_of(x, *r.failing_kernel);
      out.witness_text = set_text(x, *r.failing_kernel);
    } else if (r.failing_cover) {
      out.witness = cover_json(x, *r.failing_cover);
      out.witness_text = cover_text(x, *r.failing_cover);
    }
    return out;
  }
  if (o.op == "cover-compact") {
    const Subset a = o.set.empty() ? x.points() : finite_set(s, o.set);
    const auto m = pick(o.method,
                        {{"filter-refines", CoverCompactMethod::filter_refines},
                         {"cover", CoverCompactMethod::cover},
                         {"vicinity-separation", CoverCompactMethod::vicinity_separation}},
                        CoverCompactMethod::cover);
    return boolean(is_cover_compact(x, a, m));
  }
  if (o.op == "quasi-phc" || o.op == "phc") {
    const auto m = pick(o.method,
                        {{"rpi-compact", QuasiPhcMethod::rpi_compact},
                         {"adh-cover", QuasiPhcMethod::adh_cover},
                         {"inherent-filter", QuasiPhcMethod::inherent_filter},
                         {"tower-adh", QuasiPhcMethod::tower_adh}},
                        QuasiPhcMethod::rpi_compact);
    const QuasiPhcReport r = is_quasi_phc(x, m);
    Outcome out = boolean(o.op == "phc" ? r.phc() : r.quasi_phc);
    if (r.failing_kernel) {
      out.witness = names_of(x, *r.failing_kernel);
      out.witness_text = set_text(x, *r.failing_kernel);
    } else if (r.failing_cover) {
      out.witness = cover_json(x, *r.failing_cover);
      out.witness_text = cover_text(x, *r.failing_cover);
    } else if (!out.holds) {
      const auto h = is_hausdorff(x).witness;
      out.witness = {x.name(h->first), x.name(h->second)};
      out.witness_text = "not hausdorff at (" + x.name(h->first) + "," + x.name(h->second) + ")";
    }
    return out;
  }
  if (o.op == "hset") {
    const FiniteTopology& t = topology_of(s);
    const auto m = pick(o.method,
                        {{"open-filter", HSetMethod::open_filter},
                         {"open-ultrafilter", HSetMethod::open_ultrafilter},
                         {"theta-adh", HSetMethod::theta_adh}},
                        HSetMethod::theta_adh);
    return boolean(hset_check_finite(t, finite_set(s, o.set), m));
  }
  usage("unknown check '" + o.op +
        "' (finite: hausdorff, topological, regular, compact-at, cover-compact, quasi-phc, phc, hset)");
}

Outcome sym_compact_outcome(const sym::SymCompactReport& r) {
  Outcome out = boolean(r.compact);
  if (!r.compact) {
    out.witness = json::object();
    out.witness["end"] = r.witness;
    out.witness["params"] = r.params ? json(print_set_literal(*r.params)) : json(nullptr);
    out.witness_text = r.witness;
  }
  return out;
}

Outcome check_sym(const Subject& s, const Options& o) {
  const sym::SymbolicPretop& x = *s.sym;
  if (o.op == "hausdorff") {
    const sym::SymHausdorffReport r = sym::sym_hausdorff(x);
    Outcome out = boolean(r.hausdorff);
    if (r.witness) {
      out.witness = {r.witness->first, r.witness->second};
      out.witness_text = "(" + r.witness->first + "," + r.witness->second + ")";
    }
    return out;
  }
  if (o.op == "compact") return sym_compact_outcome(sym::sym_is_compact(x));
  if (o.op == "compact-at") {
    const DefSet a = sym_set(x, s, o.set);
    const DefSet f = o.filter.empty() ? x.carrier() : sym_set(x, s, o.filter, "--filter");
    return sym_compact_outcome(sym::sym_compact_at(x, f, a));
  }
  if (o.op == "hset") return sym_compact_outcome(sym::sym_compact_at(sym::sym_regularize(x), sym_set(x, s, o.set),
                                                                    sym_set(x, s, o.set)));
  if (o.op == "h-closed") {
    Outcome out = sym_compact_outcome(sym::sym_is_compact(sym::sym_regularize(x)));
    if (out.holds && !sym::sym_hausdorff(x).hausdorff) {
      out = boolean(false);
      out.witness = out.witness_text = "not hausdorff";
    }
    return out;
  }
  usage("unknown check '" + o.op + "' (symbolic: hausdorff, compact, compact-at, hset, h-closed)");
}

Outcome check(Subject& s, const Options& o) { return s.sym ? check_sym(s, o) : check_finite(s, o); }

// --- construct ----------------------------------------------------------------

Outcome finite_space_result(const std::string& name, const FinitePretop& y) {
  ModelDocument d;
  d.add(model::SpaceDecl{name, y});
  Outcome out;
  out.result = {{"name", name}, {"vicinity", vicinity_json(y)}};
  out.text = model::print_model(d);
  while (!out.text.empty() && out.text.back() == '\n') out.text.pop_back();
  return out;
}

Outcome sym_space_result(const std::string& name, const sym::SymbolicPretop& y,
                         const std::optional<sym::EndExtension>& e = std::nullopt) {
  Outcome out;
  std::string text = y.describe();
  while (!text.empty() && text.back() == '\n') text.pop_back();
  out.result = json::object();
  out.result["name"] = name;
  out.result["describe"] = text;
  out.text = "# " + name + "\n" + text;
  if (e) {
    json added = json::array();
    std::string names;
    for (const auto& p : e->added) {
      added.push_back(p.name);
      names += (names.empty() ? "" : " ") + p.name;
    }
    out.result["added"] = added;
    out.result["compact"] = e->compact;
    out.result["hausdorff"] = e->hausdorff.hausdorff;
    out.text += "\nadded: {" + names + "}\ncompact: " + yes_no(e->compact) +
                "\nhausdorff: " + yes_no(e->hausdorff.hausdorff);
  }
  return out;
}

Outcome construct(Subject& s, const Options& o) {
  const std::string name = s.name + "_" + o.op;
  if (s.sym) {
    const sym::SymbolicPretop& x = *s.sym;
    if (o.op == "regularize") return sym_space_result(name, sym::sym_regularize(x));
    if (o.op == "restrict") return sym_space_result(name, sym::sym_restrict(x, sym_set(x, s, o.set)));
    if (o.op == "end-extension") {
      const sym::EndExtension e = sym::end_extension(x);
      return sym_space_result(name, e.space, e);
    }
    if (o.op == "one-point") {
      const sym::EndExtension e = sym::one_point_compactification(x);
      return sym_space_result(name, e.space, e);
    }
    usage("unknown construction '" + o.op + "' (symbolic: regularize, restrict, end-extension, one-point)");
  }
  const FinitePretop& x = *s.fin;
  if (o.op == "regularize") return finite_space_result(name, partial_regularization(x));
  if (o.op == "restrict") return finite_space_result(name, restrict(x, finite_set(s, o.set)));
  if (o.op == "theta") return finite_space_result(name, theta_of_topology(topology_of(s)).theta);
  if (o.op == "star" || o.op == "kappa") {
    const StarKappaReport r = star_and_kappa_finite(x);
    return finite_space_result(name, o.op == "star" ? r.star : r.kappa);
  }
  if (o.op == "strict" || o.op == "simple") {
    if (!s.ext) unresolved("'" + s.name + "' is not an extension");
    return finite_space_result(name, o.op == "strict" ? strict_extension(*s.ext) : simple_extension(*s.ext));
  }
  usage("unknown construction '" + o.op + "' (finite: regularize, restrict, theta, star, kappa, strict, simple)");
}

// --- map ----------------------------------------------------------------------

Outcome map_finite(const ModelDocument& doc, const Options& o) {
  const FiniteMap f = doc.finite_map(o.map);
  const model::MapDecl& md = doc.map_decl(o.map);
  const FinitePretop& x = f.source();
  const FinitePretop& y = f.target();
  if (o.op == "continuous") {
    const auto m = pick(o.method,
                        {{"limit", ContinuityMethod::limit},
                         {"adh-filter", ContinuityMethod::adh_filter},
                         {"adh-set", ContinuityMethod::adh_set},
                         {"inh", ContinuityMethod::inh},
                         {"vicinity", ContinuityMethod::vicinity}},
                        ContinuityMethod::vicinity);
    const ContinuityReport r = is_continuous(f, m);
    Outcome out = boolean(r.continuous);
    if (!r.continuous) {
      out.witness = json::object();
      out.witness["point"] = r.point ? json(x.name(*r.point)) : json(nullptr);
      // limit/vicinity report source sets, the set-based methods target sets
      const bool on_target = m == ContinuityMethod::adh_set || m == ContinuityMethod::inh;
      const FinitePretop& side = on_target ? y : x;
      out.witness["set"] = r.set ? names_of(side, *r.set) : json(nullptr);
      if (r.point) out.witness_text = "at " + x.name(*r.point);
      if (r.set) out.witness_text += (out.witness_text.empty() ? "" : " ") + set_text(side, *r.set);
    }
    return out;
  }
  if (o.op == "perfect") {
    const auto m = pick(o.method,
                        {{"definition", PerfectMethod::definition},
                         {"adh-inequality", PerfectMethod::adh_inequality},
                         {"a-and-b", PerfectMethod::a_and_b}},
                        PerfectMethod::definition);
    const PerfectReport r = is_perfect(f, m);
    Outcome out = boolean(r.perfect);
    if (!r.perfect) {
      const FinitePretop& kside = m == PerfectMethod::definition ? y : x;
      out.witness = json::object();
      out.witness["kernel"] = r.kernel ? names_of(kside, *r.kernel) : json(nullptr);
      out.witness["point"] = r.point ? json(y.name(*r.point)) : json(nullptr);
      if (r.kernel) out.witness_text = set_text(kside, *r.kernel);
      if (r.point) out.witness_text += (out.witness_text.empty() ? "at " : " at ") + y.name(*r.point);
    }
    return out;
  }
  if (o.op == "onto") return boolean(f.surjective());
  if (o.op == "strongly-irreducible") {
    const IrreducibleReport r = is_strongly_irreducible(f);
    Outcome out = boolean(r.strongly_irreducible);
    if (r.witness) {
      out.witness = {names_of(y, r.witness->first), names_of(y, r.witness->second)};
      out.witness_text = set_text(y, r.witness->first) + " " + set_text(y, r.witness->second);
    }
    return out;
  }
  Subject src{md.source, x, std::nullopt, std::nullopt, std::nullopt, &doc};
  Subject dst{md.target, y, std::nullopt, std::nullopt, std::nullopt, &doc};
  if (o.op == "image") return finite_set_result(y, f.image(finite_set(src, o.set)));
  if (o.op == "preimage") return finite_set_result(x, f.preimage(finite_set(dst, o.set)));
  usage("unknown map op '" + o.op + "' (finite: continuous, perfect, onto, strongly-irreducible, image, preimage)");
}

Outcome map_sym(const ModelDocument& doc, const Options& o) {
  const sym::SymMap f = doc.symbolic_map(o.map);
  const model::MapDecl& md = doc.map_decl(o.map);
  if (o.op == "continuous") {
    const sym::SymContinuityReport r = sym::sym_is_continuous(f);
    Outcome out = boolean(r.continuous);
    if (r.witness) out.witness = out.witness_text = *r.witness;
    return out;
  }
  if (o.op == "onto") return boolean(sym::sym_is_onto(f));
  if (o.op == "preimage") {
    Subject dst{md.target, std::nullopt, std::nullopt, f.target(), std::nullopt, &doc};
    return sym_set_result(f.preimage(sym_set(f.target(), dst, o.set)));
  }
  if (o.op == "kappa") {
    const sym::KappaMap k =
        sym::extend_map_kappa(f, sym::end_extension(f.source()), sym::end_extension(f.target()));
    Outcome out = boolean(k.continuity.continuous);
    json assigned = json::object();
    std::string lines;
    for (const auto& [from, to] : k.assigned) {
      assigned[from] = to;
      lines += from + " -> " + to + "\n";
    }
    out.result = {{"continuous", k.continuity.continuous}, {"onto", k.onto}, {"assigned", assigned}};
    out.text = lines + "continuous: " + yes_no(k.continuity.continuous) + "\nonto: " + yes_no(k.onto);
    if (k.continuity.witness) out.witness = out.witness_text = *k.continuity.witness;
    return out;
  }
  usage("unknown map op '" + o.op + "' (symbolic: continuous, onto, preimage, kappa)");
}

// --- builtin, validate, oracle --------------------------------------------------

Subject builtin_subject(const std::string& text) {
  std::string name = text;
  int param = 1;
  if (const auto open = text.find('('); open != std::string::npos) {
    if (text.back() != ')') usage("malformed builtin '" + text + "'");
    name = text.substr(0, open);
    const std::string arg = text.substr(open + 1, text.size() - open - 2);
    try {
      std::size_t used = 0;
      param = std::stoi(arg, &used);
      if (used != arg.size()) throw std::invalid_argument(arg);
    } catch (const std::exception&) {
      usage("malformed builtin parameter '" + arg + "'");
    }
  }
  Subject s;
  s.name = name;
  s.sym = sym::builtin(name, param);
  return s;
}

const std::vector<std::string> kComputeOps = {"adh", "inh", "cl-theta", "describe", "regularize"};
const std::vector<std::string> kCheckOps = {"hausdorff", "compact", "compact-at", "hset", "h-closed"};
const std::vector<std::string> kConstructOps = {"end-extension", "one-point", "restrict"};

bool among(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

Outcome builtin_cmd(const Options& o) {
  Subject s = builtin_subject(o.op);
  Options inner = o;
  inner.op = o.compute.empty() ? "describe" : o.compute;
  if (among(kComputeOps, inner.op)) return compute_sym(s, inner);
  if (among(kCheckOps, inner.op)) return check_sym(s, inner);
  if (among(kConstructOps, inner.op)) return construct(s, inner);
  usage("unknown --compute '" + inner.op + "'");
}

Outcome validate(const ModelDocument& doc) {
  Outcome out;
  json spaces = json::array(), maps = json::array(), sets = json::array(), other = json::array();
  for (const auto& d : doc.decls()) {
    const std::string& n = model::decl_name(d);
    if (std::holds_alternative<model::SpaceDecl>(d) || std::holds_alternative<model::BuiltinDecl>(d) ||
        std::holds_alternative<model::TopologyDecl>(d) || std::holds_alternative<model::ExtensionDecl>(d)) {
      spaces.push_back(n);
    } else if (std::holds_alternative<model::MapDecl>(d)) {
      maps.push_back(n);
    } else {
      sets.push_back(n);
    }
  }
  out.result = {{"declarations", doc.decls().size()}, {"spaces", spaces}, {"maps", maps}, {"sets", sets}};
  out.text = "ok: " + std::to_string(doc.decls().size()) + " declarations (" + std::to_string(spaces.size()) +
             " spaces, " + std::to_string(maps.size()) + " maps, " + std::to_string(sets.size()) + " sets)";
  return out;
}

Outcome oracle(const Options& o) {
  OracleConfig cfg;
  cfg.max_points = o.max_points;
  cfg.suites = o.suites;
  cfg.seed = o.seed;
  cfg.workers = o.workers;
  cfg.samples = o.samples;
  const OracleSummary s = run_oracle_suite(cfg);
  Outcome out;
  out.result = oracle_summary_json(s);
  out.holds = s.all_passed();
  json failing = json::array();
  for (const auto& r : s.suites) {
    out.text += std::string(r.passed() ? "PASS " : "FAIL ") + r.name + " " +
                std::to_string(r.cases - r.failures) + "/" + std::to_string(r.cases) + "\n";
    if (!r.passed()) {
      failing.push_back({{"suite", r.name}, {"counterexample", *r.counterexample}});
      out.witness_text += "\n  " + r.name + ": " + *r.counterexample;
    }
  }
  if (!failing.empty()) out.witness = failing;
  while (!out.text.empty() && out.text.back() == '\n') out.text.pop_back();
  return out;
}

// --- driver ---------------------------------------------------------------------

json provenance(const Options& o) {
  json p = json::object();
  p["tool"] = "pretop";
  p["version"] = PRETOP_VERSION;
  p["command"] = o.command;
  if (!o.op.empty()) p[o.command == "builtin" ? "builtin" : "op"] = o.op;
  if (!o.compute.empty()) p["compute"] = o.compute;
  if (!o.file.empty()) p["file"] = o.file;
  if (!o.space.empty()) p["space"] = o.space;
  if (!o.map.empty()) p["map"] = o.map;
  if (!o.set.empty()) p["set"] = o.set;
  if (!o.filter.empty()) p["filter"] = o.filter;
  if (!o.method.empty()) p["method"] = o.method;
  if (o.iterations != 1) p["iterations"] = o.iterations;
  if (o.command == "oracle") {
    p["max_points"] = o.max_points;
    p["seed"] = o.seed;
    p["samples"] = o.samples;
  }
  return p;
}

Outcome dispatch(const Options& o) {
  if (o.command == "oracle") return oracle(o);
  if (o.command == "builtin") return builtin_cmd(o);
  const ModelDocument doc = load(o.file);
  if (o.command == "validate") return validate(doc);
  if (o.command == "map") {
    if (o.map.empty()) usage("--map is required");
    return doc.map_decl(o.map).symbolic() ? map_sym(doc, o) : map_finite(doc, o);
  }
  Subject s = subject_of(doc, o.space);
  if (o.command == "compute") return compute(s, o);
  if (o.command == "check") return check(s, o);
  return construct(s, o);
}

std::string render(const Options& o, const Outcome& r, double ms) {
  if (o.as_json) {
    json j = json::object();
    j["result"] = r.result;
    j["witness"] = r.witness;
    j["elapsed_ms"] = ms;
    j["provenance"] = provenance(o);
    return j.dump(2) + "\n";
  }
  std::string out = r.text + "\n";
  if (!r.witness_text.empty()) out += "witness: " + r.witness_text + "\n";
  return out;
}

}  // namespace

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ParseError:
      return kExitParse;
    case ErrorKind::SizeLimit:
    case ErrorKind::FragmentEscape:
    case ErrorKind::WindowTooSmall:
    case ErrorKind::UnclassifiableImageTrace:
      return kExitLimit;
    default:
      return kExitInvalid;
  }
}

json oracle_summary_json(const OracleSummary& s) {
  json suites = json::array();
  for (const auto& r : s.suites) {
    json by_size = json::object();
    for (const auto& [n, c] : r.by_size) by_size[std::to_string(n)] = c;
    json j = json::object();
    j["name"] = r.name;
    j["statement"] = r.statement;
    j["sampled"] = r.sampled;
    j["cases"] = r.cases;
    j["passed"] = r.cases - r.failures;
    j["failed"] = r.failures;
    j["by_size"] = by_size;
    j["counterexample"] = r.counterexample ? json(*r.counterexample) : json(nullptr);
    suites.push_back(j);
  }
  json out = json::object();
  out["max_points"] = s.max_points;
  out["seed"] = s.seed;
  out["all_passed"] = s.all_passed();
  out["suites"] = suites;
  return out;
}

CommandResult run_command(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"pretop: finite and symbolic pretopological spaces", "pretop"};
  app.require_subcommand(1);
  app.set_version_flag("--version", PRETOP_VERSION);

  auto common = [&](CLI::App* sub) {
    sub->add_option("-f,--file", o.file, "model file");
    sub->add_option("--space", o.space, "space name");
    sub->add_option("--map", o.map, "map name");
    sub->add_option("--set", o.set, "set literal or set name");
    sub->add_option("--filter", o.filter, "filter kernel (compact-at)");
    sub->add_option("--method", o.method, "decision method");
    sub->add_option("--iterations", o.iterations, "operator iterations")->check(CLI::NonNegativeNumber);
    sub->add_flag("--json", o.as_json, "JSON report");
  };
  struct Sub {
    const char* name;
    const char* help;
    const char* positional;
  };
  const Sub subs[] = {
      {"validate", "parse and validate a model file", nullptr},
      {"compute", "evaluate an operator: adh, inh, cl-theta, adh-filter, vicinity, regularize, tower, describe",
       "op"},
      {"check", "decide a property: hausdorff, topological, regular, compact, compact-at, cover-compact, "
                "quasi-phc, phc, hset, h-closed",
       "op"},
      {"map", "analyse a map: continuous, perfect, onto, strongly-irreducible, image, preimage, kappa", "op"},
      {"construct", "build a space: regularize, restrict, theta, star, kappa, strict, simple, end-extension, "
                    "one-point",
       "op"},
      {"oracle", "run the exhaustive oracle suites", nullptr},
      {"builtin", "work on a built-in symbolic space: urysohn, half_grid, discrete_ray(c)", "name"},
  };
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    common(sub);
    if (s.positional) sub->add_option(s.positional, o.op, s.positional)->required();
    if (std::string(s.name) == "builtin") sub->add_option("--compute", o.compute, "operation");
    if (std::string(s.name) == "oracle") {
      sub->add_option("--max-points", o.max_points, "largest exhaustive size (<= 4)");
      sub->add_option("--seed", o.seed, "sampling seed");
      sub->add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber);
      sub->add_option("--samples", o.samples, "sampled instances at 4 points")->check(CLI::NonNegativeNumber);
      sub->add_option("--suite", o.suites, "suite names (default all)");
      sub->add_option("suites", o.suites, "suite names");
    }
    sub->final_callback([&o, name = std::string(s.name)] { o.command = name; });
  }

  CommandResult res;
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    res.out = app.help();
    return res;
  } catch (const CLI::CallForVersion&) {
    res.out = std::string(PRETOP_VERSION) + "\n";
    return res;
  } catch (const CLI::ParseError& e) {
    if (!app.get_subcommands().empty() && e.get_exit_code() == 0) {
      res.out = app.get_subcommands().front()->help();
      return res;
    }
    res.exit_code = kExitParse;
    res.err = std::string("ParseError: ") + e.what() + "\n";
    return res;
  }
  for (auto* sub : app.get_subcommands()) o.command = sub->get_name();

  const auto t0 = std::chrono::steady_clock::now();
  try {
    const Outcome r = dispatch(o);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    res.out = render(o, r, ms);
    res.exit_code = r.holds ? kExitOk : kExitFalse;
  } catch (const Error& e) {
    res.exit_code = exit_code_for(e.kind());
    res.err = std::string(e.what()) + "\n";
    if (o.as_json) {
      json j = json::object();
      j["result"] = nullptr;
      j["witness"] = nullptr;
      j["elapsed_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      j["provenance"] = provenance(o);
      j["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
      res.out = j.dump(2) + "\n";
    }
  }
  return res;
}

}  // namespace pretop::cli
