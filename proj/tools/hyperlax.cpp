#include <iostream>
#include <string>
#include <vector>

#include "hyperlax_cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv, argv + argc);
    std::string help;
    const auto result = hyperlax::cli::run(args, &help);
    if (!help.empty()) {
        std::cout << help;
        return 0;
    }
    std::cout << hyperlax::cli::render(result);
    return result.exit_code();
}
