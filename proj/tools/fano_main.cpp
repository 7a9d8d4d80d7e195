#include <iostream>
#include <string>
#include <vector>

#include "fano/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fano::run_cli(std::move(args), std::cout, std::cerr);
}
