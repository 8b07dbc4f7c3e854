#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cuspforge/integer.hpp"

namespace cuspforge {

enum class ExitCode : int { Ok = 0, Usage = 1, Mismatch = 2 };

struct RunConfig {
  std::string command;  // cusps divisors gmap sigma matrix reduce det verify report
  unsigned long q = 3;
  unsigned deg_p = 1;
  unsigned r = 2;
  std::string mode = "symbolic";  // symbolic | numeric
  std::string format = "json";    // json | csv | text
  std::optional<Integer> at;      // evaluation point for csv / numeric
  std::string variant = "plain";  // matrix command only
  unsigned max_r = 64;            // cap on r for symbolic runs
};

struct RunResult {
  ExitCode code = ExitCode::Ok;
  std::string document;  // emitted on stdout (or to --out)
  std::string error;     // diagnostic for stderr; empty on success
};

const std::vector<std::string>& known_commands();

/// Deterministic: identical configs give byte-identical documents.
RunResult run(const RunConfig& config);

}  // namespace cuspforge
