#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace adjpow::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs one invocation. `args` excludes the program name. Results go to `out`,
// diagnostics and timings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace adjpow::cli
