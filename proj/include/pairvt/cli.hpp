#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace pairvt::cli {

enum ExitCode : int {
    kSuccess = 0,
    kPropertyViolated = 1,
    kUsageError = 2,
    kResourceCapExceeded = 3,
};

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`; word lists are read from `in` when a command
/// gets no words on the command line.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pairvt::cli
