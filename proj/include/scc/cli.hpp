#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scc::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kTheoremViolation = 3,
  kPrecondition = 4,
};

/// Runs the tool with argv-style arguments (without the program name).
/// Input files named "-" are read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace scc::cli
