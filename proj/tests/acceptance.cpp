// One PASS/FAIL line per acceptance criterion; exit status 1 when any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "cli.hpp"
#include "pretop/end_extension.hpp"
#include "pretop/finite_pretop.hpp"
#include "pretop/oracle_suite.hpp"
#include "pretop/set_literal.hpp"
#include "pretop/symbolic_map.hpp"
#include "pretop/symbolic_pretop.hpp"
#include "pretop/traces.hpp"

using namespace pretop;
using namespace pretop::sym;

namespace {

int failures = 0;

struct Verdict {
  bool ok = false;
  std::string detail;
};

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void report(const std::string& id, const std::string& title, double budget_ms, const std::function<Verdict()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = fn();
  } catch (const std::exception& e) {
    v = {false, std::string("threw ") + e.what()};
  }
  const double ms = ms_since(t0);
  if (budget_ms > 0 && ms > budget_ms) {
    v.ok = false;
    v.detail += " (over the " + std::to_string(static_cast<int>(budget_ms)) + " ms budget)";
  }
  failures += !v.ok;
  std::printf("%s %-3s %s [%.1f ms]%s%s\n", v.ok ? "PASS" : "FAIL", id.c_str(), title.c_str(), ms,
              v.detail.empty() ? "" : ": ", v.detail.c_str());
}

DefSet lit(const SymbolicPretop& x, const char* text) { return parse_set_literal(text, x.schema()); }

Verdict suite_verdict(const OracleSummary& s, std::initializer_list<const char*> names) {
  Verdict v{true, ""};
  for (const char* n : names) {
    const SuiteResult* r = s.find(n);
    if (!r) return {false, std::string("missing suite ") + n};
    if (!v.detail.empty()) v.detail += "; ";
    v.detail += std::string(n) + " " + std::to_string(r->cases - r->failures) + "/" + std::to_string(r->cases);
    if (!r->passed()) {
      v.ok = false;
      v.detail += ", first counterexample " + *r->counterexample;
    }
  }
  return v;
}

}  // namespace

int main() {
  report("1", "Urysohn cl_theta B and cl_theta cl_theta B", 1000, [] {
    const SymbolicPretop u = urysohn();
    const DefSet b = lit(u, "grid(G; cols>0)");
    const DefSet once = cl_theta(u, b, 1), twice = cl_theta(u, b, 2);
    const bool ok = once == b.unite(lit(u, "grid(G; cols=0) | atom(pinf)")) &&
                    twice == once.unite(lit(u, "atom(minf)"));
    return Verdict{ok, print_set_literal(once) + " then " + print_set_literal(twice)};
  });

  report("2", "regularized Urysohn compact, Urysohn not compact at (row +end, col 0)", 1000, [] {
    const SymbolicPretop u = urysohn();
    const SymCompactReport r = sym_is_compact(sym_regularize(u));
    const SymCompactReport t = sym_is_compact(u);
    return Verdict{r.compact && !t.compact && t.witness == "G(row +end, col 0)", "witness " + t.witness};
  });

  report("3", "A compact at A in the theta form, theta of the subspace on A not compact", 1000, [] {
    const SymbolicPretop u = urysohn();
    const DefSet a = lit(u, "grid(G; cols=0) | atom(pinf)");
    const bool hset = sym_compact_at(sym_regularize(u), a, a).compact;
    const SymCompactReport sub = sym_is_compact(sym_regularize(sym_restrict(u, a)));
    return Verdict{hset && !sub.compact && sub.witness == "G(row +end, col 0)", "subspace witness " + sub.witness};
  });

  OracleSummary battery;
  const auto t4 = std::chrono::steady_clock::now();
  {
    OracleConfig cfg;
    cfg.max_points = 3;
    cfg.workers = 4;
    cfg.suites = {"continuity-5way", "compact-at",     "cover-compact-3way", "perfect",        "open-filter-adh",
                  "tower-adh",       "theta-quotient", "extension-plus",     "extension-sharp", "trace-identity"};
    try {
      battery = run_oracle_suite(cfg);
    } catch (const std::exception& e) {
      std::printf("FAIL 4   battery threw %s\n", e.what());
      ++failures;
    }
  }
  const double battery_ms = ms_since(t4);
  report("4a", "continuity 5-way", 0, [&] { return suite_verdict(battery, {"continuity-5way"}); });
  report("4b", "compact_at filter <=> cover", 0, [&] { return suite_verdict(battery, {"compact-at"}); });
  report("4c", "cover-compact 3-way", 0, [&] { return suite_verdict(battery, {"cover-compact-3way"}); });
  report("4d", "perfect definition <=> adh-inequality <=> (a) and (b)", 0,
         [&] { return suite_verdict(battery, {"perfect"}); });
  report("4e", "adh_pi F = adh_rpi F for open F", 0, [&] { return suite_verdict(battery, {"open-filter-adh"}); });
  report("4f", "adh_rpi F = adh_pi F^1", 0, [&] { return suite_verdict(battery, {"tower-adh"}); });
  report("4g", "theta-quotient identity", 0, [&] { return suite_verdict(battery, {"theta-quotient"}); });
  report("4h", "Y# <= Y <= Y+", 0, [&] { return suite_verdict(battery, {"extension-plus", "extension-sharp"}); });
  report("4i", "adh_Y+({p} u U) = oU u adh_pi U", 0, [&] { return suite_verdict(battery, {"trace-identity"}); });
  report("4", "battery runtime under 60 s", 0, [&] {
    return Verdict{battery_ms < 60000.0, std::to_string(static_cast<int>(battery_ms)) + " ms"};
  });

  report("5", "exactly one Hausdorff pretopology on 3 points", 1000, [] {
    int count = 0;
    bool discrete = false;
    for_each_pretop(3, [&](const FinitePretop& x) {
      if (!is_hausdorff(x).hausdorff) return;
      ++count;
      discrete = x == FinitePretop::discrete(3);
    });
    return Verdict{count == 1 && discrete, "count " + std::to_string(count)};
  });

  report("6", "end extensions of discrete rays and extended maps", 5000, [] {
    const SymbolicPretop x = discrete_ray(1), x2 = discrete_ray(2);
    const EndExtension e1 = end_extension(x);
    bool ok = e1.added.size() == 1 && e1.compact;
    const KappaMap shift = extend_map_kappa(SymMap::make(x, x, {StrandMap::affine("R0", "R0", {1, 1}, {1, 0})}), e1, e1);
    ok = ok && shift.continuity.continuous && shift.assigned.size() == 1 &&
         shift.assigned[0].first == shift.assigned[0].second;
    const EndExtension e2 = end_extension(x2), o2 = one_point_compactification(x2);
    const SymMap id2 = SymMap::make(x2, x2, {StrandMap::affine("R0", "R0"), StrandMap::affine("R1", "R1")});
    const KappaMap to_one = extend_map_kappa(id2, e2, o2), to_two = extend_map_kappa(id2, e2, e2);
    ok = ok && o2.compact && e2.compact && to_one.continuity.continuous && to_one.onto &&
         to_two.continuity.continuous && to_two.onto;
    return Verdict{ok, "added " + std::to_string(e1.added.size()) + ", shift " + shift.assigned[0].first + " -> " +
                           shift.assigned[0].second};
  });

  report("7", "oracle_suite JSON identical for 1, 4 and 8 workers", 0, [] {
    OracleConfig cfg;
    cfg.max_points = 4;
    cfg.seed = 2024;
    std::string base;
    bool ok = true;
    for (int w : {1, 4, 8}) {
      cfg.workers = w;
      const std::string body = cli::oracle_summary_json(run_oracle_suite(cfg)).dump();
      if (base.empty()) base = body;
      ok = ok && body == base;
    }
    return Verdict{ok, std::to_string(base.size()) + " bytes"};
  });

  return failures == 0 ? 0 : 1;
}
