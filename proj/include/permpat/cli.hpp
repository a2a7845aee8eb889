#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permpat::cli {

// Runs the permpat command line (args exclude the program name) and writes
// to the supplied streams. Returns the process exit code: 0 success,
// 1 verification failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permpat::cli
