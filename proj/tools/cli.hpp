#ifndef BOOLEFOCK_TOOLS_CLI_HPP_
#define BOOLEFOCK_TOOLS_CLI_HPP_

#include <iosfwd>

namespace boolefock::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfigError = 2;

/// Entry point of the `boolefock` tool; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace boolefock::cli

#endif  // BOOLEFOCK_TOOLS_CLI_HPP_
