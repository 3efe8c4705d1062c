#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace groth::cli {

// Runs one CLI invocation.  args excludes the program name.
// Exit codes: 0 success, 1 unexpected check violation, 2 usage error,
// 3 budget exceeded (partial output).
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace groth::cli
