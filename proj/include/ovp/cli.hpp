#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ovp::cli {

/// Runs the command line given by args (without the program name).
/// Exit codes: 0 success, 1 usage error, 2 domain error, 3 verification
/// failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ovp::cli
