#pragma once
// Command line front end: every operation behind a verb, with deterministic
// human or JSON-lines output.

#include <iosfwd>
#include <string>
#include <vector>

namespace sphb::cli {

// Runs one invocation (args exclude the program name). Returns the process
// exit status: 0 = success / verified, 1 = verified-false or search failure,
// 2 = usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sphb::cli
