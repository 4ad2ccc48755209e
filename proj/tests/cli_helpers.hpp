#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

inline CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = mzva::cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}
