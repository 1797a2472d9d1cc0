#ifndef YBX_TOOLS_CLI_HPP_
#define YBX_TOOLS_CLI_HPP_

#include <iosfwd>

namespace ybx::cli {

/// Exit codes of the ybx tool.
enum Exit : int { kPass = 0, kFail = 1, kUsage = 2 };

/// Entry point of the ybx tool, with the streams made explicit for tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ybx::cli

#endif  // YBX_TOOLS_CLI_HPP_
