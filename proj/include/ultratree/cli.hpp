#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace ultratree::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;     // usage, parse or I/O problem
inline constexpr int kExitNegative = 2;  // NOT-US, not isometric, failed verification, ...

/// Runs one `ultratree` invocation. `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ultratree::cli
