#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ffprog::cli {

// Process exit codes. Every error path maps to exactly one of these.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitCharTooSmall = 3;
inline constexpr int kExitBudget = 4;
inline constexpr int kExitIo = 5;
inline constexpr int kExitInternal = 6;

// `args` excludes the program name. Reports go to `out` unless --out is
// given; diagnostics always go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ffprog::cli
