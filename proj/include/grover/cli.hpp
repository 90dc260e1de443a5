#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace grover::cli {

enum ExitStatus : int {
    kSuccess = 0,
    kDisagreement = 1,
    kUsageError = 2,
    kIoError = 3,
};

/// Runs one invocation. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`; on error nothing is written to `out`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace grover::cli
