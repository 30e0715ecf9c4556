#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oalgdim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRefused = 3;
inline constexpr int kExitInternal = 4;

inline constexpr int kMaxDrinfeldD = 5;

/// Runs the tool on `args` (without the program name).  Results go to `out`,
/// diagnostics to `err`; with --json errors are written to `out` as well.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oalgdim::cli
