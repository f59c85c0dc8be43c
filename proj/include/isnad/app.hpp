#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isnad {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Command-line entry point. `args` excludes the program name.
/// Tabular results go to `out` (or the file named by -o), diagnostics to `err`.
/// Returns 0 on success, 1 on failure or rejected input, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isnad
