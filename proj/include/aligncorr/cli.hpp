#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aligncorr {

/// Runs the command line front end. `args[0]` is the program name.
/// Returns 0 on success, 1 for input errors, 2 for property violations or
/// internal inconsistencies.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aligncorr
