#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ratcat::cli {

/// Exit codes returned by run().
enum ExitCode : int {
  kOk = 0,
  kChecksFailed = 1,  // verify ran and at least one check failed (or stopped early)
  kUsage = 2,         // bad arguments, invalid word or shape
  kTooLarge = 3,      // a size guard refused the request
  kIoError = 4,
};

/// Runs one command line. `args` includes the program name in args[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ratcat::cli
