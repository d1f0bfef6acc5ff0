#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace framehs::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsage = 2,
    kNumerical = 3,
    kAcceptance = 4,
};

// Entry point for the `framehs` tool; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace framehs::cli
