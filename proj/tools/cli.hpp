#pragma once

// The `eseq` command line: table, value, valuation, factor, verify, dprime,
// bounds and antypes subcommands.

#include <ostream>
#include <span>
#include <string>

namespace eseq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace eseq::cli
