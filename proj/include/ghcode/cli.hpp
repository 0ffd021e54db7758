#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ghcode::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

/// Runs one ghcode command. args excludes the program name. Regular output goes
/// to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ghcode::cli
