#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace edgepoly {

// Runs one CLI invocation. `args` excludes the program name. Returns the
// process exit code: 0 success, 1 user error (bad arguments or bad graph),
// 2 resource limit, 3 internal assertion failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace edgepoly
