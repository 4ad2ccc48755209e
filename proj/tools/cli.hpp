#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mzva::cli {

enum ExitCode : int {
  kSuccess = 0,  // also Proved
  kRefuted = 1,
  kInconclusive = 2,
  kUsage = 3,
  kBoundOverflow = 4,
};

// Runs one command.  args excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// key=value record field; values with spaces, quotes, '=' or backslashes are
// double-quoted with backslash escapes.
std::string record_value(const std::string& value);

}  // namespace mzva::cli
