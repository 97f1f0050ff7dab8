#include <iostream>
#include <string>
#include <vector>

#include "ncode/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return ncode::cli::run(args, std::cout, std::cerr);
}
