#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jensen::cli {

enum ExitCode : int { kOk = 0, kInvalid = 1, kUsage = 2 };

/// Runs one command line (args excludes the program name). Reports go to
/// `out`, diagnostics to `err`. Returns 0 when every check holds, 1 when a
/// certificate or chain check is invalid, 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jensen::cli
