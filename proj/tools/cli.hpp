#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mcgh::cli {

// Exit codes: 0 success / check passed, 1 input or usage error,
// 2 computation succeeded but the check failed.
enum Exit : int { kOk = 0, kInputError = 1, kCheckFailed = 2 };

// `args` excludes the program name. The report is written to `out` unless
// --out names a file.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace mcgh::cli
