#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fmc::cli {

// Process exit codes, one per failure class.
enum ExitCode : int {
  kExitOk = 0,
  kExitParseError = 1,     // unreadable or malformed input
  kExitCompileError = 2,   // ontology generation failed
  kExitVoidModel = 3,      // `check` found no valid configuration
  kExitInvalidConfig = 4,  // `validate` found violations
  kExitOutputError = 5,    // output not writable or would be overwritten
  kExitAnalysisError = 6,  // analysis precondition failed (e.g. counting cap)
  kExitUsage = 64,         // bad command line
};

// Runs one fmc invocation. `args` excludes the program name. Reports go to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fmc::cli
