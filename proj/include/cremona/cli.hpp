#pragma once

#include <string>
#include <vector>

namespace cremona::cli {

struct Result {
    int exit_code;
    /// One JSON document, newline-terminated.
    std::string output;
};

/// Runs one command; args excludes the program name.
Result run(const std::vector<std::string>& args);

} // namespace cremona::cli
