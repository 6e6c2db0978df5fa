#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lrlab::cli {

/// Exit statuses of run_command.
enum ExitCode : int {
  kOk = 0,
  kFail = 1,     // verification failure, no witness or no decomposition
  kUsage = 2,    // bad arguments or inputs outside an operation's domain
  kBudget = 3,   // term budget exceeded
};

/// Runs one command line (without the program name). Output is a pure
/// function of the arguments, independent of --threads.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lrlab::cli
