#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fano {

/// Parse and execute one command line (without the program name).
/// Exit codes: 0 success, 2 invalid input, 3 inconclusive stability
/// verdict, 4 internal consistency failure.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace fano
