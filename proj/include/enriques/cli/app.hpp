#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace enriques::cli {

enum ExitCode : int { kOk = 0, kInternal = 1, kUsage = 2, kPrecondition = 3 };

// Runs the command line `args` (args[0] is the program name) and returns the
// process exit code. Records go to `out`, diagnostics and batch summaries to
// `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace enriques::cli
