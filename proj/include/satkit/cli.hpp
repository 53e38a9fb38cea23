#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace satkit {

// Exit codes. Solver-verdict subcommands (queens, latin, dimacs) use the SAT
// competition convention; puzzle subcommands return found / none.
inline constexpr int kExitSat = 10;
inline constexpr int kExitUnsat = 20;
inline constexpr int kExitFound = 0;
inline constexpr int kExitNone = 1;
inline constexpr int kExitUsage = 2;

// Environment variable holding the default --timeout, in seconds.
inline constexpr const char* kTimeoutEnv = "SATKIT_TIMEOUT";

// `args` excludes the program name. All output goes to `out` / `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace satkit
