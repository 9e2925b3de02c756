#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crystal {

// Runs one CLI invocation (args exclude the program name). Returns the
// process exit code: 0 ok, 1 invalid input, 2 broken internal invariant.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace crystal
