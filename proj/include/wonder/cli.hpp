#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wonder::cli {

enum ExitCode : int {
  kOk = 0,
  kFalse = 1,
  kUsage = 2,
  kResource = 3,
  kInternal = 4,
};

// Runs one command line (without the program name); returns the exit status.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wonder::cli
