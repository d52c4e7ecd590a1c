#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cysp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // UNSAT, not found, invalid coloring, nonempty diff
inline constexpr int kExitUsage = 2;

// Runs one command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cysp::cli
