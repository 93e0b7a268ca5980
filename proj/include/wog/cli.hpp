#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wog {

enum ExitCode : int { kExitOk = 0, kExitInputError = 1, kExitDisagreement = 2 };

/// Runs one command. args excludes the program name. Reports go to out and
/// errors, as JSON, to err.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace wog
