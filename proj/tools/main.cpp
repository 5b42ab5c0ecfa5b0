#include <iostream>
#include <vector>

#include "gamecol/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gamecol::cli::run(args, std::cout, std::cerr, std::cin);
}
