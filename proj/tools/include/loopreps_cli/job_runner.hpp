#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

namespace loopreps::cli {

enum ExitCode : int { kOk = 0, kValidationFailure = 1, kMalformedJob = 2 };

struct RunOptions {
  bool quiet = false;
  int maxSteps = 64;  // link-chain default
  int order = 8;      // series-check default
};

struct RunResult {
  int exitCode = kOk;
  nlohmann::json report;  // always has "schemaVersion"; empty "results" for malformed jobs
};

/// Parses and executes one job (JSON text). Human-readable lines go to `out`
/// unless quiet; diagnostics go to `err`.
RunResult runJob(const std::string& jobText, const RunOptions& options, std::ostream& out, std::ostream& err);

}  // namespace loopreps::cli
