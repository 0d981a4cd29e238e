#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace modrep {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitPrecondition = 3;

/// Entry point of the `modrep` tool. args[0] is the program name.
/// Subcommands: verify, fairness, stable.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modrep
