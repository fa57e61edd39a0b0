#pragma once

// Command-line front end. Subcommands: lcoe, sweep, compare, parity.
// Results go to stdout (or --out), diagnostics to stderr. Exit codes:
// 0 success, 1 domain/validation/parse error, 2 usage error.

#include <iosfwd>
#include <string>
#include <vector>

namespace lcoe::cli {

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lcoe::cli
