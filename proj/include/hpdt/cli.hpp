#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hpdt::cli {

enum ExitCode { kOk = 0, kFalse = 1, kUsage = 2 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hpdt::cli
