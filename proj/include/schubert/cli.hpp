#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace schubert::cli {

/// Exit codes: 0 success, 1 a verification suite failed, 2 usage error.
inline constexpr int kSuccess = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schubert::cli
