#include <iostream>
#include <vector>

#include "derange/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return derange::run_cli(args, std::cout, std::cerr);
}
