#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ddsim::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kInputError = 1,      // parse, usage or I/O failure
  kNumericalError = 2,  // ill-conditioning, clustering ambiguity, singular solves
  kNotAchievable = 3,   // Impossible verdict, NotAchievable, PreconditionViolated
  kSingular = 4,        // OutOfScopeSingular verdict, SingularInput
};

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ddsim::cli
