#ifndef SPECBOUND_CLI_APP_HPP
#define SPECBOUND_CLI_APP_HPP

#include <ostream>
#include <string>
#include <vector>

namespace specbound::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kNumericalFailure = 3,
  kBoundCheckFailure = 4,
  kNonDelzant = 5,
  kInvalidGeometry = 6,
};

/// Runs the command line `args` (without the program name). Human-readable
/// output goes to `out` only after the whole computation succeeded;
/// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace specbound::cli

#endif // SPECBOUND_CLI_APP_HPP
