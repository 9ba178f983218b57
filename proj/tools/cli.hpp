#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polycob::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 2,
    kWall = 3,
    kEmpty = 4,
    kEquilateral = 5,
};

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polycob::cli
