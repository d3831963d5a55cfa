#pragma once

#include <exception>
#include <ostream>
#include <string>
#include <vector>

namespace momentcone::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kInvalidInput = 2,
  kDimensionDeficiency = 3,
  kInternalError = 4,
};

/// Maps an escaped exception to the documented exit code.
int exit_code_for(const std::exception& e);

/// args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace momentcone::cli
