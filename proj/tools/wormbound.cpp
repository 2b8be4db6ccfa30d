#include <iostream>
#include <string>
#include <vector>

#include "wormbound/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return wormbound::cli::dispatch(args, std::cout, std::cerr);
}
