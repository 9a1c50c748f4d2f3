#include <iostream>
#include <string>
#include <vector>

#include "lrforest/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return lrforest::run_cli(args, std::cin, std::cout, std::cerr);
}
