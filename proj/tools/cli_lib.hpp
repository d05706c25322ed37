#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace critex {

// Runs the command-line front end on the given arguments (excluding the
// program name). Returns the process exit code: 0 success, 2 input error,
// 3 numeric failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace critex
