#pragma once

#include <iosfwd>

namespace fishburn::cli {

// Exit codes: 0 all checks pass, 1 check or predicate failure, 2 usage or
// parse error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fishburn::cli
