#pragma once

#include <iosfwd>

namespace qh {

enum ExitCode { kExitOk = 0, kExitIdentityFailure = 1, kExitInvalidInput = 2, kExitCap = 3, kExitMismatch = 4 };

/// Entry point of the `qh` command line tool.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace qh
