#pragma once

#include <iosfwd>

namespace hive::cli {

/// Exit codes of run().
enum ExitCode : int {
    kSuccess = 0,
    kDomainError = 1, ///< bad usage or invalid input
    kConsistencyFailure = 2,
};

/// Entry point of the hivetool command line. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace hive::cli
