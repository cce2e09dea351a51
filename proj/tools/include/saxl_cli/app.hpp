#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace saxl::cli {

/// Exit codes of the saxl command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitCapExceeded = 2;

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace saxl::cli
