#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cvtnet::cli {

// Dispatches one command-line invocation. args excludes the program name.
// Data goes to `out`, diagnostics to `err`.
// Exit codes: 0 success, 1 runtime or limit failure, 2 argument error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cvtnet::cli
