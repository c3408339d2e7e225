#pragma once

#include <ostream>

namespace sptcrank::cli {

enum ExitCode : int { Pass = 0, Failure = 1, Usage = 2, ResourceGuard = 3 };

/// Entry point of sptcheck. Output goes to `out` unless --out names a file.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace sptcrank::cli
