#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tesscensus::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kInvariant = 3 };

/// Runs one command line (without the program name). `fit` reads `in` when
/// no file is named. Results go to `out` or the --out file; errors go to
/// `err` as one JSON line.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tesscensus::cli
