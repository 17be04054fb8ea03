#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ibtc::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitRuntimeError = 1,
    kExitUsage = 2,
};

/// Runs the `ibtc` command line. args[0] is the program name. Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ibtc::cli
