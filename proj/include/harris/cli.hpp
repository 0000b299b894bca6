#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace harris::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,        // bad flags, invalid parameters, unreadable input
  kFitFailed = 3,    // degenerate_sample, no_root_in_bracket, ...
  kCheckFailed = 4,  // a stability check did not pass
};

/// Runs one command. `args` excludes the program name. Standard input is
/// only read by `fit` when no input path (or "-") is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace harris::cli
