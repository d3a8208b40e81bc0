#include <iostream>

#include "cremona/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const auto result = cremona::cli::run(args);
    std::cout << result.output;
    return result.exit_code;
}
