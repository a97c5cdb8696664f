#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mpinv::cli {

enum ExitCode : int { kOk = 0, kSemanticFailure = 1, kParseFailure = 2 };

/// Runs one invocation; args excludes the program name. Results go to `out`
/// (or to --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mpinv::cli
