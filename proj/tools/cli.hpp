#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace exactroot::cli {

/// Exit codes: 0 yes / success, 1 definite no (or failed verification),
/// 2 usage, parse or budget error.
enum ExitCode { kYes = 0, kNo = 1, kError = 2 };

/// Runs one command. `args` excludes the program name. Payloads go to
/// `out`, diagnostics to `err`; "-" as an input path reads `in`.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace exactroot::cli
