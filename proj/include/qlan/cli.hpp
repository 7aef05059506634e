#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qlan::cli {

// Exit statuses.
inline constexpr int exit_ok = 0;
inline constexpr int exit_domain_error = 1;
inline constexpr int exit_usage_error = 2;

// Runs one command. `args` excludes the program name. `in` backs `--input -`;
// results go to `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace qlan::cli
