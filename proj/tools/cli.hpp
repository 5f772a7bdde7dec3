#ifndef MODCOUNT_TOOLS_CLI_HPP
#define MODCOUNT_TOOLS_CLI_HPP

#include <iosfwd>

namespace modcount::cli {

enum ExitCode : int { kOk = 0, kValidation = 1, kRuntime = 2 };

/// Entire command-line front end; main() only forwards to this so tests can
/// drive it in-process.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace modcount::cli

#endif
