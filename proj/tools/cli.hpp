#ifndef HBCK_TOOLS_CLI_HPP
#define HBCK_TOOLS_CLI_HPP

#include <ostream>

namespace hbck::cli {

enum ExitCode : int {
    kOk = 0,
    kViolations = 1,
    kInputError = 2,
    kClaimViolation = 3,
};

/// Runs one command line. Report records go to `out` as one JSON object per
/// line; human-readable diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace hbck::cli

#endif // HBCK_TOOLS_CLI_HPP
