#ifndef CHAINBANDS_TOOLS_CLI_HPP
#define CHAINBANDS_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace chainbands::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,       // usage, missing file, malformed file
  kValidationError = 2,  // graph rejected by validate
  kNumericalError = 3,
};

/// Runs one command line (without the program name). Results go to `out`
/// unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chainbands::cli

#endif  // CHAINBANDS_TOOLS_CLI_HPP
