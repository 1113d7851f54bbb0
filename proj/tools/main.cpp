#include <iostream>
#include <string>
#include <vector>

#include "planeguard/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return planeguard::cli_run(args, std::cin, std::cout, std::cerr);
}
