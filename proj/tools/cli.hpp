#ifndef PCOMP_TOOLS_CLI_HPP
#define PCOMP_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace pcomp::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
    ok = 0,
    invalid = 1,    ///< verdict or decision is negative
    io_error = 2,   ///< parse failure, unreadable file, bad argument
    infeasible = 3, ///< requested construction cannot exist
};

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pcomp::cli

#endif // PCOMP_TOOLS_CLI_HPP
