#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nilnf::cli {

constexpr int kSchemaVersion = 1;

enum ExitCode { kOk = 0, kDomainError = 1, kVerificationFailed = 2 };

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`; the result is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilnf::cli
