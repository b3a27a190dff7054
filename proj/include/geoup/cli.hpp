#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace geoup::cli {

enum ExitCode : int { kOk = 0, kValidationFailure = 1, kIoFailure = 2 };

/// Parses `args` (without the program name) and runs one subcommand:
/// asym, eval, generate, certify, optimize, pleijel, render.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace geoup::cli
