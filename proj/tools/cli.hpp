#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latqmc {

/// Runs the latqmc command line. args[0] is the program name.
/// Returns 0 on success, 2 on a precondition violation, 3 when a numerical
/// guard trips, 1 when verify-appendix reports a failed check.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latqmc
