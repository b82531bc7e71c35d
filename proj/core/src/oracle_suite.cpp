#include "pretop/oracle_suite.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <thread>

#include "pretop/constructions.hpp"
#include "pretop/errors.hpp"
#include "pretop/finite_pretop.hpp"
#include "pretop/map_analysis.hpp"
#include "pretop/regularization.hpp"

namespace pretop {

namespace {

std::string set_str(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int i : s.elements()) {
    if (!first) out += ' ';
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

std::string space_str(const FinitePretop& x) {
  std::string out = "[";
  for (int i = 0; i < x.size(); ++i) {
    if (i) out += ',';
    out += set_str(x.min_vicinity(i));
  }
  return out + "]";
}

std::string table_str(const std::vector<int>& t) {
  std::string out = "[";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(t[i] + 1);
  }
  return out + "]";
}

std::string flag(bool b) { return b ? "1" : "0"; }

struct Tally {
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::optional<std::string> first;

  template <typename What>
  void check(bool ok, What&& what) {
    ++cases;
    if (ok) return;
    ++failures;
    if (!first) first = what();
  }
};

struct Instance {
  const FinitePretop& x;
  const FinitePretop* y;  // pair suites only
};

struct Suite {
  SuiteInfo info;
  bool pair = false;
  std::function<void(const Instance&, Tally&)> run;
};

template <typename Fn>
void for_each_nonempty(int n, Fn&& fn) {
  for (std::uint64_t b = 1; b < (std::uint64_t{1} << n); ++b) fn(Subset(b));
}

template <typename Fn>
void for_each_subset(int n, Fn&& fn) {
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) fn(Subset(b));
}

template <typename Fn>
void for_each_dense(const FinitePretop& y, Fn&& fn) {
  for_each_nonempty(y.size(), [&](Subset x) {
    if (y.adh(x) == y.points()) fn(Extension{y, x});
  });
}

std::string ext_str(const Extension& e) { return "Y=" + space_str(e.space) + " X=" + set_str(e.base); }

void continuity_5way(const Instance& in, Tally& t) {
  const int n = in.x.size();
  for_each_table(n, in.y->size(), [&](const std::vector<int>& table) {
    const FiniteMap f = FiniteMap::make(in.x, *in.y, table);
    static constexpr ContinuityMethod methods[] = {ContinuityMethod::limit, ContinuityMethod::adh_filter,
                                                   ContinuityMethod::adh_set, ContinuityMethod::inh,
                                                   ContinuityMethod::vicinity};
    bool r[5];
    for (int i = 0; i < 5; ++i) r[i] = is_continuous(f, methods[i]).continuous;
    const bool same = std::all_of(r, r + 5, [&](bool b) { return b == r[0]; });
    t.check(same, [&] {
      return "X=" + space_str(in.x) + " Y=" + space_str(*in.y) + " f=" + table_str(table) + " limit=" + flag(r[0]) +
             " adh-filter=" + flag(r[1]) + " adh-set=" + flag(r[2]) + " inh=" + flag(r[3]) +
             " vicinity=" + flag(r[4]);
    });
  });
}

void compact_at_2way(const Instance& in, Tally& t) {
  const int n = in.x.size();
  for_each_nonempty(n, [&](Subset a) {
    for_each_nonempty(n, [&](Subset k) {
      const bool f = compact_at(in.x, {k}, a, CompactMethod::filter).compact;
      const bool c = compact_at(in.x, {k}, a, CompactMethod::cover).compact;
      t.check(f == c, [&] {
        return "X=" + space_str(in.x) + " F=" + set_str(k) + " A=" + set_str(a) + " filter=" + flag(f) +
               " cover=" + flag(c);
      });
    });
  });
}

void cover_compact_3way(const Instance& in, Tally& t) {
  for_each_nonempty(in.x.size(), [&](Subset a) {
    const bool r = is_cover_compact(in.x, a, CoverCompactMethod::filter_refines);
    const bool c = is_cover_compact(in.x, a, CoverCompactMethod::cover);
    const bool v = is_cover_compact(in.x, a, CoverCompactMethod::vicinity_separation);
    t.check(r == c && c == v, [&] {
      return "X=" + space_str(in.x) + " A=" + set_str(a) + " filter-refines=" + flag(r) + " cover=" + flag(c) +
             " vicinity-separation=" + flag(v);
    });
  });
}

void perfect_3way(const Instance& in, Tally& t) {
  for_each_table(in.x.size(), in.y->size(), [&](const std::vector<int>& table) {
    const FiniteMap f = FiniteMap::make(in.x, *in.y, table);
    const bool d = is_perfect(f, PerfectMethod::definition).perfect;
    const bool a = is_perfect(f, PerfectMethod::adh_inequality).perfect;
    const bool cont = is_continuous(f, ContinuityMethod::vicinity).continuous;
    const bool ab = cont ? is_perfect(f, PerfectMethod::a_and_b).perfect : d;
    t.check(d == a && d == ab, [&] {
      return "X=" + space_str(in.x) + " Y=" + space_str(*in.y) + " f=" + table_str(table) +
             " definition=" + flag(d) + " adh-inequality=" + flag(a) + " a-and-b=" + flag(ab);
    });
  });
}

void open_filter_adh(const Instance& in, Tally& t) {
  const FinitePretop r = partial_regularization(in.x);
  for_each_nonempty(in.x.size(), [&](Subset k) {
    const bool open = in.x.inh(k).includes(k);
    const bool ok = !open || in.x.adh(k) == r.adh(k);
    const TowerLemmas l = tower_lemmas_check(in.x, {k});
    t.check(ok && l.open == open && l.open_lemma == ok, [&] {
      return "X=" + space_str(in.x) + " F=" + set_str(k) + " adh_pi=" + set_str(in.x.adh(k)) +
             " adh_rpi=" + set_str(r.adh(k));
    });
  });
}

Subset step(const FinitePretop& x, Subset k) {
  Subset out;
  for (int y : k.elements()) out = out | x.min_vicinity(y);
  return out;
}

void tower_adh(const Instance& in, Tally& t) {
  const FinitePretop r = partial_regularization(in.x);
  for_each_nonempty(in.x.size(), [&](Subset k) {
    bool ok = true;
    Subset level = k;
    for (int i = 0; i <= in.x.size(); ++i) {
      const Subset next = step(in.x, level);
      ok = ok && r.adh(level) == in.x.adh(next);
      level = next;
    }
    const TowerLemmas l = tower_lemmas_check(in.x, {k});
    t.check(ok && l.tower_lemma && l.shifted, [&] {
      return "X=" + space_str(in.x) + " F=" + set_str(k) + " adh_rpi=" + set_str(r.adh(k)) +
             " adh_pi(F1)=" + set_str(in.x.adh(step(in.x, k)));
    });
  });
}

void filter_tower_levels(const Instance& in, Tally& t) {
  const int n = in.x.size();
  for_each_nonempty(n, [&](Subset k) {
    const FilterTower f = filter_tower(in.x, {k});
    bool ok = !f.levels.empty() && f.levels.front() == k && f.stabilized_at <= n;
    for (std::size_t i = 0; ok && i + 1 < f.levels.size(); ++i) ok = f.levels[i + 1] == step(in.x, f.levels[i]);
    const Subset lim = f.levels.back();
    ok = ok && step(in.x, lim) == lim && in.x.inh(lim).includes(lim);
    ok = ok && f.open == in.x.inh(k).includes(k);
    bool inherent = true;
    for_each_superset(k, n, [&](Subset s) {
      inherent = inherent && !in.x.inh(s).empty();
      return inherent;
    });
    ok = ok && f.inherent == inherent;
    t.check(ok, [&] { return "X=" + space_str(in.x) + " F=" + set_str(k); });
  });
}

void theta_quotient_lemma(const Instance& in, Tally& t) {
  const int n = in.x.size();
  for (int m = 1; m <= n; ++m) {
    std::vector<std::string> names;
    for (int i = 0; i < m; ++i) names.push_back(std::to_string(i + 1));
    for_each_table(n, m, [&](const std::vector<int>& table) {
      Subset hit;
      for (int v : table) hit = hit | Subset::single(v);
      if (hit != Subset::full(m)) return;
      const ThetaQuotientReport r = theta_quotient(in.x, names, table);
      bool ok = r.lemma_holds;
      for (int y = 0; ok && y < m; ++y) {
        for_each_nonempty(m, [&](Subset k) {
          const bool sigma =
              compact_at(in.x, PrincipalFilter{r.map.preimage(k)}, r.map.fiber(y), CompactMethod::cover).compact;
          ok = ok && sigma == r.space.min_vicinity(y).includes(k);
        });
      }
      t.check(ok, [&] { return "X=" + space_str(in.x) + " f=" + table_str(table); });
    });
  }
}

void extension_plus(const Instance& in, Tally& t) {
  for_each_dense(in.x, [&](const Extension& e) {
    const Extension plus{strict_extension(e), e.base};
    t.check(projectively_leq(e, plus).leq, [&] { return ext_str(e) + " Y+=" + space_str(plus.space); });
  });
}

void extension_sharp(const Instance& in, Tally& t) {
  for_each_dense(in.x, [&](const Extension& e) {
    const Extension sharp{simple_extension(e), e.base};
    t.check(projectively_leq(sharp, e).leq, [&] { return ext_str(e) + " Y#=" + space_str(sharp.space); });
  });
}

void extension_sharp_topological(const Instance& in, Tally& t) {
  if (!is_topological(in.x).topological) return;
  extension_sharp(in, t);
}

// Calls fn(e, p, U, lhs, rhs) for every U ⊆ X in the trace filter at p.
template <typename Fn>
void for_each_trace_set(const FinitePretop& y, Fn&& fn) {
  for_each_dense(y, [&](const Extension& e) {
    const FinitePretop yp = strict_extension(e);
    const int n = y.size();
    for (int p = 0; p < n; ++p) {
      for_each_superset(e.trace(p), n, [&](Subset u) {
        if (!e.base.includes(u)) return true;
        Subset adh_x;
        for (int q : e.base.elements()) {
          if (y.min_vicinity(q).meets(u)) adh_x = adh_x | Subset::single(q);
        }
        fn(e, p, u, yp.adh(Subset::single(p) | u), o_set(e, u) | adh_x);
        return true;
      });
    }
  });
}

std::string trace_str(const Extension& e, int p, Subset u, Subset lhs, Subset rhs) {
  return ext_str(e) + " p=" + std::to_string(p + 1) + " U=" + set_str(u) + " adh_Y+({p} u U)=" + set_str(lhs) +
         " oU u adh_pi U=" + set_str(rhs);
}

void prop_identity(const Instance& in, Tally& t) {
  for_each_trace_set(in.x, [&](const Extension& e, int p, Subset u, Subset lhs, Subset rhs) {
    t.check(lhs == rhs, [&] { return trace_str(e, p, u, lhs, rhs); });
  });
}

void prop_inclusion(const Instance& in, Tally& t) {
  for_each_trace_set(in.x, [&](const Extension& e, int p, Subset u, Subset lhs, Subset rhs) {
    t.check(lhs.includes(rhs), [&] { return trace_str(e, p, u, lhs, rhs); });
  });
  for_each_dense(in.x, [&](const Extension& e) {
    const FinitePretop ryp = partial_regularization(strict_extension(e));
    const FinitePretop ys = simple_extension(e);
    for (int p = 0; p < in.x.size(); ++p) {
      t.check(ryp.min_vicinity(p).includes(ys.min_vicinity(p)),
              [&] { return ext_str(e) + " p=" + std::to_string(p + 1) + " r(Y+) kernel misses Y# kernel"; });
    }
  });
}

void quasi_phc_4way(const Instance& in, Tally& t) {
  static constexpr QuasiPhcMethod methods[] = {QuasiPhcMethod::rpi_compact, QuasiPhcMethod::adh_cover,
                                               QuasiPhcMethod::inherent_filter, QuasiPhcMethod::tower_adh};
  bool q[4], h[4];
  for (int i = 0; i < 4; ++i) {
    const QuasiPhcReport r = is_quasi_phc(in.x, methods[i]);
    q[i] = r.quasi_phc;
    h[i] = r.hausdorff;
  }
  const bool same = std::all_of(q, q + 4, [&](bool b) { return b == q[0]; }) &&
                    std::all_of(h, h + 4, [&](bool b) { return b == h[0]; });
  t.check(same, [&] {
    return "X=" + space_str(in.x) + " rpi-compact=" + flag(q[0]) + " adh-cover=" + flag(q[1]) +
           " inherent-filter=" + flag(q[2]) + " tower-adh=" + flag(q[3]);
  });
}

void hset_3way(const Instance& in, Tally& t) {
  if (!is_topological(in.x).topological) return;
  const FiniteTopology top = FiniteTopology::from_pretop(in.x);
  for_each_nonempty(in.x.size(), [&](Subset a) {
    const bool f = hset_check_finite(top, a, HSetMethod::open_filter);
    const bool u = hset_check_finite(top, a, HSetMethod::open_ultrafilter);
    const bool th = hset_check_finite(top, a, HSetMethod::theta_adh);
    t.check(f == u && u == th, [&] {
      return "X=" + space_str(in.x) + " A=" + set_str(a) + " open-filter=" + flag(f) + " open-ultrafilter=" +
             flag(u) + " theta-adh=" + flag(th);
    });
  });
}

void theta_topology(const Instance& in, Tally& t) {
  if (!is_topological(in.x).topological) return;
  const FiniteTopology top = FiniteTopology::from_pretop(in.x);
  const ThetaPair th = theta_of_topology(top);
  bool ok = th.neighbourhood == in.x && th.theta == partial_regularization(in.x);
  for (int i = 0; ok && i < in.x.size(); ++i) ok = th.theta.min_vicinity(i) == top.closure(top.min_open(i));
  t.check(ok, [&] { return "X=" + space_str(in.x) + " theta=" + space_str(th.theta); });
}

void hausdorff_discrete(const Instance& in, Tally& t) {
  const bool h = is_hausdorff(in.x).hausdorff;
  const bool d = in.x == FinitePretop::discrete(in.x.size());
  t.check(h == d, [&] { return "X=" + space_str(in.x) + " hausdorff=" + flag(h) + " discrete=" + flag(d); });
}

void closure_axioms(const Instance& in, Tally& t) {
  const int n = in.x.size();
  t.check(in.x.adh(Subset()).empty(), [&] { return "X=" + space_str(in.x) + " adh {} nonempty"; });
  for_each_subset(n, [&](Subset a) {
    for_each_subset(n, [&](Subset b) {
      const bool ok = in.x.adh(a | b) == (in.x.adh(a) | in.x.adh(b)) && in.x.adh(a).includes(a) &&
                      in.x.inh(a) == in.x.adh(a.complement(n)).complement(n) &&
                      (!b.includes(a) || in.x.adh(b).includes(in.x.adh(a)));
      t.check(ok, [&] { return "X=" + space_str(in.x) + " A=" + set_str(a) + " B=" + set_str(b); });
    });
  });
}

const std::vector<Suite>& registry() {
  static const std::vector<Suite> suites = {
      {{"continuity-5way", "limit, adh-filter, adh-set, inh and vicinity continuity agree on every map"}, true,
       continuity_5way},
      {{"compact-at", "compact_at by filters agrees with compact_at by covers"}, false, compact_at_2way},
      {{"cover-compact-3way", "filter-refines, cover and vicinity-separation cover-compactness agree"}, false,
       cover_compact_3way},
      {{"perfect", "perfect by definition agrees with adh-inequality, and with (a) and (b) on continuous maps"},
       true, perfect_3way},
      {{"open-filter-adh", "adh_pi F = adh_rpi F for open filters F"}, false, open_filter_adh},
      {{"tower-adh", "adh_rpi F^n = adh_pi F^(n+1) along the filter tower"}, false, tower_adh},
      {{"filter-tower", "tower levels follow the kernel recursion and stabilize at an open filter"}, false,
       filter_tower_levels},
      {{"theta-quotient", "the quotient convergence identity holds for every surjection"}, false,
       theta_quotient_lemma},
      {{"extension-plus", "Y <= Y+ for every extension"}, false, extension_plus},
      {{"extension-sharp", "Y# <= Y for every extension"}, false, extension_sharp},
      {{"extension-sharp-topological", "Y# <= Y for every extension with topological Y"}, false,
       extension_sharp_topological},
      {{"trace-inclusion", "adh_Y+({p} u U) contains oU u adh_pi U, and r(Y+) is finer than Y#"}, false,
       prop_inclusion},
      {{"trace-identity", "adh_Y+({p} u U) = oU u adh_pi U for U in the trace filter at p"}, false, prop_identity},
      {{"quasi-phc-4way", "the four quasi-PHC characterizations agree"}, false, quasi_phc_4way},
      {{"hset-3way", "open-filter, open-ultrafilter and theta-adherence H-set checks agree"}, false, hset_3way},
      {{"theta-topology", "the theta pretopology of a topology is the regularization of its neighbourhoods"}, false,
       theta_topology},
      {{"hausdorff-discrete", "a finite pretopology is Hausdorff iff it is discrete"}, false, hausdorff_discrete},
      {{"closure-axioms", "adh is expansive, additive and monotone, adh {} = {}, inh is its dual"}, false,
       closure_axioms},
  };
  return suites;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

struct Unit {
  std::size_t suite;
  int n;
  std::uint64_t a;
  std::uint64_t b;
};

struct UnitResult {
  Tally tally;
  std::exception_ptr error;
};

constexpr int kExhaustiveUpTo = 3;

void add_units(std::vector<Unit>& units, std::size_t si, const Suite& s, int n, const OracleConfig& cfg) {
  const std::uint64_t count = pretop_count(n);
  if (n <= kExhaustiveUpTo) {
    for (std::uint64_t a = 0; a < count; ++a) {
      if (!s.pair) {
        units.push_back({si, n, a, 0});
        continue;
      }
      for (std::uint64_t b = 0; b < count; ++b) units.push_back({si, n, a, b});
    }
    return;
  }
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(fnv1a(s.info.name)), static_cast<std::uint32_t>(n)};
  std::mt19937_64 rng(seq);
  std::set<std::pair<std::uint64_t, std::uint64_t>> picked;
  const std::uint64_t space = s.pair ? count * count : count;
  const std::uint64_t want = std::min<std::uint64_t>(static_cast<std::uint64_t>(std::max(cfg.samples, 0)), space);
  while (picked.size() < want) {
    const std::uint64_t a = rng() % count;
    const std::uint64_t b = s.pair ? rng() % count : 0;
    picked.insert({a, b});
  }
  for (const auto& [a, b] : picked) units.push_back({si, n, a, b});
}

UnitResult run_unit(const Unit& u) {
  UnitResult r;
  try {
    const Suite& s = registry()[u.suite];
    const FinitePretop x = pretop_at(u.n, u.a);
    if (s.pair) {
      const FinitePretop y = pretop_at(u.n, u.b);
      s.run({x, &y}, r.tally);
    } else {
      s.run({x, nullptr}, r.tally);
    }
  } catch (...) {
    r.error = std::current_exception();
  }
  return r;
}

}  // namespace

bool OracleSummary::all_passed() const noexcept {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); });
}

const SuiteResult* OracleSummary::find(const std::string& name) const {
  for (const auto& s : suites) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

const std::vector<SuiteInfo>& oracle_suites() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> out;
    for (const auto& s : registry()) out.push_back(s.info);
    return out;
  }();
  return infos;
}

OracleSummary run_oracle_suite(const OracleConfig& cfg) {
  if (cfg.max_points < 1 || cfg.max_points > 4) {
    fail(ErrorKind::SizeLimit, "oracle suites run on 1..4 points, got " + std::to_string(cfg.max_points));
  }
  const auto& reg = registry();
  std::vector<std::size_t> selected;
  if (cfg.suites.empty()) {
    for (std::size_t i = 0; i < reg.size(); ++i) selected.push_back(i);
  } else {
    for (const auto& name : cfg.suites) {
      auto it = std::find_if(reg.begin(), reg.end(), [&](const Suite& s) { return s.info.name == name; });
      if (it == reg.end()) fail(ErrorKind::ResolutionError, "unknown suite '" + name + "'");
      const auto idx = static_cast<std::size_t>(it - reg.begin());
      if (std::find(selected.begin(), selected.end(), idx) == selected.end()) selected.push_back(idx);
    }
  }

  std::vector<Unit> units;
  for (std::size_t si : selected) {
    for (int n = 1; n <= cfg.max_points; ++n) add_units(units, si, reg[si], n, cfg);
  }

  std::vector<UnitResult> results(units.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < units.size(); i = next++) results[i] = run_unit(units[i]);
  };
  const int workers = std::max(cfg.workers, 1);
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (const auto& r : results) {
    if (r.error) std::rethrow_exception(r.error);
  }

  OracleSummary out;
  out.max_points = cfg.max_points;
  out.seed = cfg.seed;
  std::size_t u = 0;
  for (std::size_t si : selected) {
    SuiteResult s;
    s.name = reg[si].info.name;
    s.statement = reg[si].info.statement;
    s.sampled = cfg.max_points > kExhaustiveUpTo;
    for (int n = 1; n <= cfg.max_points; ++n) s.by_size[n] = 0;
    for (; u < units.size() && units[u].suite == si; ++u) {
      const Tally& t = results[u].tally;
      s.cases += t.cases;
      s.failures += t.failures;
      s.by_size[units[u].n] += t.cases;
      if (t.first && !s.counterexample) s.counterexample = "n=" + std::to_string(units[u].n) + " " + *t.first;
    }
    out.suites.push_back(std::move(s));
  }
  return out;
}

}  // namespace pretop
