#ifndef KATHA_CLI_H_
#define KATHA_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace katha::cli {

enum ExitStatus : int {
  kSuccess = 0,
  kUsageError = 1,
  kInputError = 2,
  kValidationFailure = 3,
  kSynthesisFailure = 4,
};

// Runs the `katha` command line. args[0] is the program name. Payload goes
// to `out`, diagnostics and reports (unless --report is given) to `err`.
int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace katha::cli

#endif  // KATHA_CLI_H_
