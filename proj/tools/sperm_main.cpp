#include <iostream>
#include <vector>

#include "sperm/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return sperm::run_cli(args, std::cout, std::cerr);
}
