#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gruler::cli {

inline constexpr const char* kToolName = "gruler";
inline constexpr const char* kVersion = "0.1.0";

/// Exit codes. Verdicts never influence them.
enum ExitCode : int {
  kOk = 0,
  kBadInput = 2,
  kPrecondition = 3,
  kNotNoExit = 4,
  kComponentTooLarge = 5,
};

/// Runs one invocation; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gruler::cli
