#pragma once

// Command-line driver. run_command is the whole CLI as a library function so
// tests can exercise it in-process; the binary is a thin wrapper.

#include "hopflab/report.hpp"

#include <string>
#include <vector>

namespace hopflab {

/// Executes one invocation given argv-style arguments (without the program
/// name). Returns the process exit code: 0 when no required check failed,
/// 1 on validation/check failures, 2 on usage errors. When out is non-null
/// the run's report is copied there.
int run_command(const std::vector<std::string>& args, Report* out = nullptr);

}  // namespace hopflab
