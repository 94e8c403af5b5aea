#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homalg::cli {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success, 1 mathematical violation or failed hypothesis, 2 usage or
/// parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homalg::cli
