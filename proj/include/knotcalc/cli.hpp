#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knot {

/// Runs the command-line front end; returns the process exit code
/// (0 success, 2 input error, 3 precondition violation, 4 internal
/// inconsistency).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace knot
