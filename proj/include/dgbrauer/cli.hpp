#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dgb {

/// Runs one command line (without the program name). Exit codes: 0 success or
/// true verdicts, 1 a checked property is false, 2 invalid input or usage.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dgb
