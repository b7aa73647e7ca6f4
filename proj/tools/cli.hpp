#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace haken::cli {

/// Exit codes: 0 success or property verified, 1 property violated,
/// 2 usage, input or format error.
inline constexpr int kOk = 0;
inline constexpr int kViolation = 1;
inline constexpr int kInputError = 2;

/// Runs the command line `args` (without the program name).
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace haken::cli
