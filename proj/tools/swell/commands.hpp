#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace swell::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailure = 2;

// Environment variable consulted when --threads is absent.
inline constexpr const char* kThreadsEnv = "SWELL_THREADS";

// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace swell::cli
