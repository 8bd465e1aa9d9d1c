#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace epolab {

enum ExitCode : int {
  kExitOk = 0,
  kExitNegative = 1,  // not e-positive, missing type, failed cell or lambda
  kExitUsage = 2,
  kExitGuard = 3,
};

/// Runs `epolab <args...>` (args exclude the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace epolab
