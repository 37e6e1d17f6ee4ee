#ifndef ODDPERM_TOOLS_CLI_HPP
#define ODDPERM_TOOLS_CLI_HPP

#include <iosfwd>

namespace oddperm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Parses and runs one command line. Normal output goes to `out`, diagnostics
// to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace oddperm::cli

#endif  // ODDPERM_TOOLS_CLI_HPP
