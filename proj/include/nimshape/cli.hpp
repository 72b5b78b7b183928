#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nimshape {

// Exit codes of the nimshape tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace nimshape
