#pragma once

#include <iosfwd>

namespace qdecoh::app {

enum ExitCode : int { kOk = 0, kConfigError = 2, kNumericalFailure = 3, kIoFailure = 4 };

/// Entry point of the qdecoh command line: gfactor, evolve, experiment,
/// fig1, oracle-check. Returns the process exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace qdecoh::app
