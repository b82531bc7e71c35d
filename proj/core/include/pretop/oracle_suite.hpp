#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pretop {

/// Sizes 1..3 are enumerated exhaustively; size 4 draws `samples` seeded
/// instances (spaces or space pairs) per suite.
struct OracleConfig {
  int max_points = 3;
  std::vector<std::string> suites;  // empty = all
  std::uint64_t seed = 1;
  int workers = 1;
  int samples = 64;
};

struct SuiteResult {
  std::string name;
  std::string statement;
  bool sampled = false;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::map<int, std::uint64_t> by_size;  // cases per point count
  std::optional<std::string> counterexample;  // from the least failing instance

  bool passed() const noexcept { return failures == 0; }
};

struct OracleSummary {
  int max_points = 0;
  std::uint64_t seed = 0;
  std::vector<SuiteResult> suites;

  bool all_passed() const noexcept;
  const SuiteResult* find(const std::string& name) const;
};

struct SuiteInfo {
  std::string name;
  std::string statement;
};
/// Registered suites in report order.
const std::vector<SuiteInfo>& oracle_suites();

/// Throws SizeLimit for max_points outside 1..4 and ResolutionError for an
/// unregistered suite name. Worker counts below 1 run on one thread.
OracleSummary run_oracle_suite(const OracleConfig& config);

}  // namespace pretop
