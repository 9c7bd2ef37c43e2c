#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symkin::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitDegenerate = 3;
inline constexpr int kExitInternal = 4;

/// Runs the command line `args` (program name excluded) and returns the exit
/// code. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symkin::cli
