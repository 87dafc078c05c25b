#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lequi {

/// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command-line tool. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Fixed-point with up to `digits` decimals, trailing zeros removed and
/// negative zero printed as 0.
std::string format_number(double value, int digits = 6);

}  // namespace lequi
