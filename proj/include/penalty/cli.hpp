#ifndef PENALTY_CLI_HPP
#define PENALTY_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace penalty::cli {

enum ExitStatus : int {
  kSuccess = 0,      ///< success, or a boolean query answered true
  kFalseAnswer = 1,  ///< boolean query answered false
  kUsageError = 2,   ///< bad arguments or unparsable input
  kCapExceeded = 3,  ///< a size cap was exceeded
};

/// Runs one command. `args` excludes the program name. A file argument of
/// "-" reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace penalty::cli

#endif  // PENALTY_CLI_HPP
