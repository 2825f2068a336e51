#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cuspforge::cli {

/// Exit codes: 0 success, 1 internal invariant violation, 2 bad input.
enum ExitCode : int { kOk = 0, kInternal = 1, kUsage = 2 };

/// Parses args (without the program name), runs the command and writes the
/// JSON envelope {command, params, result, version} or an error object to
/// out. Help text goes to out as plain text.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace cuspforge::cli
