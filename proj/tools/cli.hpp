#pragma once

#include <iosfwd>

namespace wyur::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kViolations = 1;
inline constexpr int kBadConfig = 2;
inline constexpr int kDimensionMismatch = 3;
inline constexpr int kIoFailure = 4;

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wyur::cli
