#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace medv::cli {

/// Exit codes.
inline constexpr int kHolds = 0;
inline constexpr int kFails = 1;
inline constexpr int kUsage = 2;
inline constexpr int kWorkCap = 3;
inline constexpr int kVerification = 4;

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace medv::cli
