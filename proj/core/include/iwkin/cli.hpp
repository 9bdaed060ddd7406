#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace iwkin {

// Command-line front end (subcommands: eval, curve, grid, obs, figure,
// selftest).  Returns the process exit code; diagnostics go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace iwkin
