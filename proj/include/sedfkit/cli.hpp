#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sedfkit {

/// Runs the command line `args` (without the program name). Returns 0 on
/// success, 1 for invalid input objects and 2 for usage errors.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sedfkit
