#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rlz {

// Runs the command line (arguments without the program name) against the
// given output and diagnostic streams.  Returns the process exit code:
// 0 success, 1 usage error, 2 data error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rlz
