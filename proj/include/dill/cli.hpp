#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dill::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed_check = 1;
inline constexpr int exit_usage = 2;

/// Runs one `dill` command. `args` excludes the program name.
/// Returns 0 on success, 1 when a verification or reproduction check fails,
/// 2 on a usage, rule-file or configuration parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dill::cli
