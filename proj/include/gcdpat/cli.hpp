#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gcdpat::cli {

enum ExitStatus : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

// args excludes the program name. Writes the report to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gcdpat::cli
