#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lexsearch::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kInvalidOrdering = 1,
  kUsageOrParseError = 2,
  kDisconnected = 3,
  kSelfCheckFailed = 4,
};

// Runs the command line `args` (without the program name). Graph input that
// is not given with --input is read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace lexsearch::cli
