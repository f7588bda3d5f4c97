#pragma once

#include <ostream>

namespace gitkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitVerificationFailed = 3;
inline constexpr int kExitUnsupported = 4;

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gitkit::cli
