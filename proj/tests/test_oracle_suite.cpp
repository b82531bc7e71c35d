#include "doctest.h"
#include "pretop/errors.hpp"
#include "pretop/oracle_suite.hpp"

using namespace pretop;

namespace {

bool same(const OracleSummary& a, const OracleSummary& b) {
  if (a.max_points != b.max_points || a.seed != b.seed || a.suites.size() != b.suites.size()) return false;
  for (std::size_t i = 0; i < a.suites.size(); ++i) {
    const auto &x = a.suites[i], &y = b.suites[i];
    if (x.name != y.name || x.cases != y.cases || x.failures != y.failures || x.by_size != y.by_size ||
        x.counterexample != y.counterexample || x.sampled != y.sampled)
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("all suites at max_points = 3") {
  OracleConfig cfg;
  cfg.workers = 4;
  const OracleSummary s = run_oracle_suite(cfg);
  CHECK(s.suites.size() >= 10);
  CHECK(s.suites.size() == oracle_suites().size());
  for (const auto& r : s.suites) {
    CAPTURE(r.name);
    CHECK(r.cases > 0);
    CHECK_FALSE(r.sampled);
    const bool literal = r.name == "extension-sharp" || r.name == "trace-identity";
    CHECK(r.passed() != literal);
    CHECK(r.counterexample.has_value() == literal);
  }
  CHECK_FALSE(s.all_passed());

  const auto* c = s.find("continuity-5way");
  REQUIRE(c);
  CHECK(c->by_size.at(1) == 1);
  CHECK(c->by_size.at(2) == 4 * 4 * 4);
  CHECK(c->by_size.at(3) == 64 * 64 * 27);

  CHECK(s.find("hausdorff-discrete")->cases == 1 + 4 + 64);
  CHECK(s.find("theta-quotient")->cases == 1 + 4 * 3 + 64 * (1 + 6 + 6));
  CHECK(s.find("extension-plus")->cases == 265);
  CHECK(s.find("extension-sharp")->failures == 80);
  CHECK(s.find("extension-sharp-topological")->cases == 110);
  CHECK(s.find("trace-identity")->by_size.at(3) == 1248);
  CHECK(s.find("trace-identity")->failures == 48);
  CHECK(*s.find("trace-identity")->counterexample ==
        "n=3 Y=[{1 2 3},{2},{3}] X={2 3} p=2 U={2} adh_Y+({p} u U)={1 2} oU u adh_pi U={2}");
  CHECK(*s.find("extension-sharp")->counterexample == "n=3 Y=[{1 3},{1 2},{3}] X={2 3} Y#=[{1 3},{2},{1 3}]");
}

TEST_CASE("suite selection and continuity count at n = 2") {
  OracleConfig cfg;
  cfg.max_points = 2;
  cfg.suites = {"continuity-5way"};
  const OracleSummary s = run_oracle_suite(cfg);
  REQUIRE(s.suites.size() == 1);
  CHECK(s.suites[0].by_size == std::map<int, std::uint64_t>{{1, 1}, {2, 64}});
  CHECK(s.suites[0].passed());

  cfg.suites = {"no-such-suite"};
  CHECK_THROWS_WITH_AS(run_oracle_suite(cfg), doctest::Contains("ResolutionError"), Error);
  cfg.suites = {};
  cfg.max_points = 5;
  CHECK_THROWS_WITH_AS(run_oracle_suite(cfg), doctest::Contains("SizeLimit"), Error);
  cfg.max_points = 0;
  CHECK_THROWS_WITH_AS(run_oracle_suite(cfg), doctest::Contains("SizeLimit"), Error);
}

TEST_CASE("seeded n = 4 sampling is deterministic across workers") {
  OracleConfig cfg;
  cfg.max_points = 4;
  cfg.seed = 7;
  const OracleSummary a = run_oracle_suite(cfg);
  cfg.workers = 4;
  const OracleSummary b = run_oracle_suite(cfg);
  cfg.workers = 8;
  const OracleSummary c = run_oracle_suite(cfg);
  CHECK(same(a, b));
  CHECK(same(a, c));
  for (const auto& r : a.suites) CHECK(r.sampled);
  CHECK(a.find("continuity-5way")->by_size.at(4) == 64 * 256);

  cfg.seed = 8;
  const OracleSummary d = run_oracle_suite(cfg);
  CHECK(d.find("compact-at")->by_size.at(3) == a.find("compact-at")->by_size.at(3));
  CHECK(d.find("closure-axioms")->by_size.at(4) == 64 * 256 + 64);
}
