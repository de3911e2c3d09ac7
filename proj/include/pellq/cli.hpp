#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pellq::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes: 0 success, 1 check/verification failure, 2 usage/parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pellq::cli
