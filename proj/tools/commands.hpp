#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pickqubo::cli {

/// Exit codes: 0 feasible / success, 2 infeasible result, 1 usage, parse or validation error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInfeasible = 2;

/// Runs one `pickqubo <subcommand> ...` invocation. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pickqubo::cli
