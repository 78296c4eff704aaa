#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "twd/oracle.hpp"

namespace twd::cli {

enum ExitCode : int {
    kOk = 0,
    kInvalidConfig = 1,
    kParseError = 2,
    kGuardExceeded = 3,
    kOracleFailure = 4,
};

// args excludes the program name. `hooks` replaces the product-kind
// implementations checked by `oracle-check`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const oracle::Hooks* hooks = nullptr);

}  // namespace twd::cli
