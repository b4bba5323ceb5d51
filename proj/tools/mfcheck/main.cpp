#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const mf::cli::Outcome outcome = mf::cli::run(args);
  std::cout << outcome.output;
  if (!outcome.error.empty()) std::cerr << outcome.error << "\n";
  return outcome.exit_code;
}
