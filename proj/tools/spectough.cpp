#include <iostream>
#include <string>
#include <vector>

#include "spectough/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return spectough::cli::run(args, std::cout, std::cerr);
}
