#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tqdha {

enum ExitCode : int { kExitOk = 0, kExitNo = 1, kExitInputError = 2 };

/// Runs one command.  `args` excludes the program name.  The report goes to
/// `out` as a single JSON document (or key/value text with --output text);
/// diagnostics go to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tqdha
