#pragma once

#include <iosfwd>

namespace cyclespec_cli {

/// Runs one command line. Exit codes: 0 success, 2 usage or domain error,
/// 3 verification failure, 1 internal error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cyclespec_cli
