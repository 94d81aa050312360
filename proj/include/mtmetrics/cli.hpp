#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mtmetrics {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;

// Runs `mtmetrics <args...>` (args excludes the program name). Reports go to
// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mtmetrics
