#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "mosaic/error.hpp"

namespace mosaic::cli {

// Stable exit codes.
enum Exit : int {
  kOk = 0,
  kCheckFailed = 1,  // a requested check failed or a diff is non-empty
  kUsage = 2,
  kParse = 3,
  kValidation = 4,
  kMissingOrtho = 5,
  kUnknownName = 6,  // also SizeTooLarge
};

int exit_code_for(ErrorCode code);

/// Runs one command line (without the program name) and returns the exit
/// code. Everything is written to `out` / `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mosaic::cli
