#pragma once

#include <string>
#include <vector>

#include "mf/report.hpp"

namespace mf::cli {

enum ExitCode : int {
  kExitVerified = 0,
  kExitFalsified = 1,
  kExitUnknown = 2,
  kExitEquivalence = 3,
  kExitUsage = 64,
};

struct Outcome {
  int exit_code = kExitUsage;
  std::string output;  // report in the requested format, or usage text
  std::string error;   // message for stderr
};

// Parses and runs one invocation; args exclude the program name.
Outcome run(const std::vector<std::string>& args);

int exit_code_for(Status status);

}  // namespace mf::cli
