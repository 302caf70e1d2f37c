#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace srlab::cli {

constexpr int kSchemaVersion = 1;

enum ExitCode : int {
    kOk = 0,
    kPropertyViolated = 2,
    kInputError = 3,
    kSearchExhausted = 4,
};

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace srlab::cli
