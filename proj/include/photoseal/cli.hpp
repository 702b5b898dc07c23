#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace photoseal::cli {

// sysexits-style process exit codes.
inline constexpr int kExitVerified = 0;
inline constexpr int kExitTampered = 1;
inline constexpr int kExitUndecodable = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitDataError = 65;
inline constexpr int kExitNoInput = 66;
inline constexpr int kExitCantCreate = 73;

/// Runs one invocation. `args` excludes the program name. Report output goes
/// to `out` as key=value lines; diagnostics and usage go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Backslash, control and non-ASCII bytes are escaped (\\, \n, \r, \t,
/// \xHH) so each report value stays on one line.
std::string escape_value(const std::string& value);

}  // namespace photoseal::cli
