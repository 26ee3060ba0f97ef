#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spectough::cli {

/// Parses argv (without the program name) and runs one subcommand. Machine
/// output goes to `out`, diagnostics to `err`. Exit codes: 0 success/pass,
/// 1 check failure or counterexample, 2 usage error, 3 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spectough::cli
