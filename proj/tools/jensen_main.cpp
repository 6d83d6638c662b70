#include <iostream>
#include <string>
#include <vector>

#include "jensen/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return jensen::cli::run_cli(args, std::cout, std::cerr);
}
