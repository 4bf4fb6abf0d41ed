#ifndef QPDEG_COMMANDS_HPP
#define QPDEG_COMMANDS_HPP

namespace qpdeg::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_argument_error = 2,
  exit_domain_error = 3,
  exit_mismatch = 4,
};

/// Parse argv and run one subcommand (spectrum, fit, solve, trace,
/// intersect, reproduce). Returns the process exit code.
int run(int argc, const char* const* argv);

}  // namespace qpdeg::cli

#endif
