#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cyclicity::cli {

inline constexpr const char* kVersion = "cyclicity 0.1.0";

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;  // not a cyclic number / no witness / inconsistency
inline constexpr int kUsage = 2;
inline constexpr int kCap = 3;

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclicity::cli
