#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bipoisson::cli {

/// Exit codes: 0 when every requested check passes, 1 when one fails,
/// 2 on malformed arguments or input files.
inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kBadInput = 2;

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bipoisson::cli
