#pragma once

#include <exception>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "eulersum/identities.hpp"

namespace eulersum::cli {

inline constexpr int schema_version = 1;

enum ExitCode : int {
  exit_ok = 0,
  exit_failed = 1,
  exit_domain = 2,
  exit_precision = 3,
};

/// Parameter names of an identity, in CSV/table column order.
const std::vector<std::string>& identity_params(std::string_view id);
std::string_view identity_description(std::string_view id);

/// "1,2,3" or "start:stop[:step]" (stop inclusive).
std::vector<double> parse_values(const std::string& text);
/// "a,b;a,b;..."
std::vector<std::pair<double, double>> parse_pairs(const std::string& text);
/// JSON array of {"pole", "mult", "coeff"} objects, or "@path" to read one from a file.
RationalFunction parse_rational(const std::string& text, double guard);

/// Formats x with the shortest representation that round-trips.
std::string format_number(double x);

/// Exit code for an error escaping a command: 3 for PrecisionError, otherwise 2.
int exit_code_for(const std::exception& error);

/// Runs the command line; all output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eulersum::cli
