#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hopf::cli {

inline constexpr unsigned long long kDefaultSeed = 12345;

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 2 validation error, 1 internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopf::cli
