#pragma once

#include <ostream>

#include "config.hpp"

namespace spectraljet::cli {

enum ExitCode { kExitPass = 0, kExitFailure = 1, kExitUsage = 2 };

// Entry point shared by the executable and the CLI tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

Json suite_json(const SuiteReport& report);

}  // namespace spectraljet::cli
