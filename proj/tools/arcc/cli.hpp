#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arc::cli {

// Process exit codes.
enum ExitStatus : int {
  kSuccess = 0,
  kDiagnostics = 1,  // at least one ERROR diagnostic
  kUsage = 2,        // bad arguments, unreadable file, unknown root, bad stimulus
  kRuntime = 3,      // runtime fault or divergence
};

// Entry point behind `arcc`. Machine-readable payloads (DOT, JSON, traces)
// go to `out`; diagnostics and messages go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arc::cli
