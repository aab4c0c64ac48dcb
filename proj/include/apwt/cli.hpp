#pragma once

#include <string>
#include <vector>

namespace apwt {

/// Entry point of the `apwt` tool; `args` excludes the program name.
/// Returns the process exit code: 0 success, 2 validation error,
/// 3 numerical-check failure, 4 I/O error.
int run_cli(const std::vector<std::string>& args);

}  // namespace apwt
