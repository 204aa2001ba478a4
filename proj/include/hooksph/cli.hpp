#ifndef HOOKSPH_CLI_HPP
#define HOOKSPH_CLI_HPP

#include <ostream>

namespace hooksph {

// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitNoInvariants = 2,
  kExitVerifyFailed = 3,
};

// Parses argv and runs one subcommand (spherical, character, eigsum, verify),
// writing the report to `out` and diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hooksph

#endif
