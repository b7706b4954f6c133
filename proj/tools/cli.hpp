#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qsig::cli {

// Exit codes: 0 success, 2 input error, 3 non-convergence, 4 resource cap.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitConvergence = 3;
inline constexpr int kExitResource = 4;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsig::cli
