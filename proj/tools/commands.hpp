#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ftflag::cli {

/// Exit codes: 0 success or consistent verdict, 1 input error,
/// 2 classification contradiction, 3 FT-realizability violation.
enum ExitCode : int { kOk = 0, kInputError = 1, kContradiction = 2, kNotRealizable = 3 };

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ftflag::cli
