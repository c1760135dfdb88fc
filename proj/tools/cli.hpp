#pragma once

#include <ostream>

namespace accelent::cli {

enum ExitCode : int {
    kSuccess = 0,
    kDomainError = 1,
    kIoError = 2,
    kNotConverged = 3,
};

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace accelent::cli
