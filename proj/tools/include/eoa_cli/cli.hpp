#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eoa::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // verification or tolerance failure
inline constexpr int kExitUsage = 2;   // bad flags or unreadable input

// Runs `eoa <args...>` (args exclude the program name). Results go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eoa::cli
