#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qmra::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_module_error = 1;
inline constexpr int exit_usage = 2;

/// Runs one subcommand. `args` excludes the program name. Results go to
/// `out` (or to --out files), diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "pi", "pi/2", "2pi", "3*pi/4" or a plain number.
double parse_area(const std::string& text);

} // namespace qmra::cli
