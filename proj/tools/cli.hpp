#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nvf::cli {

// Runs one command line (without the program name). Exit codes: 0 success,
// 1 precondition or usage failure, 2 invariant violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nvf::cli
