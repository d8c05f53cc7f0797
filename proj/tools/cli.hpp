#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tautilt::cli {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Payload goes to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tautilt::cli
