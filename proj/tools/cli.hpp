#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "pretop/errors.hpp"
#include "pretop/oracle_suite.hpp"

namespace pretop::cli {

using json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitInvalid = 3;
inline constexpr int kExitLimit = 4;

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

/// Runs one `pretop` invocation; args exclude the program name.
CommandResult run_command(const std::vector<std::string>& args);

/// Exit code for a library error kind.
int exit_code_for(ErrorKind kind) noexcept;

/// Summary payload of `pretop oracle --json` (the `result` field).
json oracle_summary_json(const OracleSummary& s);

}  // namespace pretop::cli
