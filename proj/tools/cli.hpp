#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace clustertrop::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kNegative = 2, kBudget = 3 };

/// Runs one command line (without the program name). JSON results go to
/// --out when given, otherwise to out.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clustertrop::cli
