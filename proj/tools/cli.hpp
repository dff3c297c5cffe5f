#pragma once

#include <string>
#include <vector>

namespace trigas::cli {

// Exit codes: 0 success, 2 usage error, 3 data/validation error,
// 4 numerical failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitData = 3;
inline constexpr int kExitNumerical = 4;

// Parses and runs one invocation; args excludes the program name.
// Errors go to stderr as a single line `error: <category>: <message>`.
int run(const std::vector<std::string>& args);

}  // namespace trigas::cli
