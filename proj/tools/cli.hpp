#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace supersmooth::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

/// Runs one command line (args excludes the program name). Reports go to
/// `out`, diagnostics to `err`; files are written only where -o is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace supersmooth::cli
