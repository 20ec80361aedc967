#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace paretocom::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,          ///< success / efficient / no manipulation
  kNegative = 1,    ///< improvement, counterexample or failed check found
  kUsage = 2,       ///< bad flags or algorithm preconditions not met
  kParse = 3,       ///< profile or argument could not be parsed/validated
  kTooLarge = 4,    ///< exhaustive search would exceed its cap
};

/// Runs one command. `args` excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace paretocom::cli
