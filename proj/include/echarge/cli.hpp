#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace echarge::cli {

enum ExitCode : int { kSuccess = 0, kInternalError = 1, kInputError = 2 };

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace echarge::cli
