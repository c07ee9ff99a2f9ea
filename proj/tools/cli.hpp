#pragma once

#include <ostream>

namespace qswap::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailedCase = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the qswap tool. Returns 0 when every check passes, 1 when any
/// case fails and 2 on usage errors (diagnostics go to err).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qswap::cli
