#pragma once

// The `mbch` command line, callable in-process so tests can drive it.

#include <iosfwd>
#include <string>
#include <vector>

namespace mbch::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2, inexact_division = 3 };

/// Environment variable that replaces every per-command degree cap.
inline constexpr const char* kMaxDegreeEnv = "MBCH_MAX_DEGREE";

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mbch::cli
