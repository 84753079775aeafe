#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qtheta::cli {

// Runs one qtheta invocation. `args` excludes the program name.
// Exit status: 0 success, 1 domain error (NotAdmissible, LevelMismatch, ...),
// 2 usage error (bad flags, unreadable or malformed input files).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qtheta::cli
