#pragma once

#include <ostream>

namespace phik::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;   // verification failed, I/O error
inline constexpr int kExitUsage = 2;     // malformed or out-of-domain arguments
inline constexpr int kExitResource = 3;  // enumeration or table guard exceeded

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace phik::cli
