#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace weyl::cli {

/// Exit codes of dc-check; every other command returns 0 or kExitError.
inline constexpr int kExitGenerates = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitNotAWeylPair = 3;
inline constexpr int kExitNoPartner = 4;

/// Runs the command line `args` (program name excluded).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weyl::cli
