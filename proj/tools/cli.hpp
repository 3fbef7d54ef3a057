#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qgrowth::cli {

enum ExitCode : int {
  ok = 0,
  check_failed = 1,
  usage = 2,
};

/// Runs the qgrowth command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qgrowth::cli
