#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace basel {

/// Overrides the default tolerance (1e-12); an explicit --tol wins.
inline constexpr const char* kToleranceEnvVar = "BASEL_TOL";

enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailure = 1,
    kExitUsage = 2,
};

/// Entry point of the `basel` command. Data goes to `out`, diagnostics and
/// usage text to `err`. args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace basel
