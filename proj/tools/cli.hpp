#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knotprime::cli {

enum ExitCode : int { kSuccess = 0, kInvalidInput = 1, kInternalError = 2 };

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knotprime::cli
