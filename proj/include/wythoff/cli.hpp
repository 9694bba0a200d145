#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wythoff::cli {

/// Exit codes: 0 success, 1 domain error or failed check, 2 usage error.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wythoff::cli
