#include <iostream>
#include <string>
#include <vector>

#include "gl2n/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gl2n::cli::run_command(args, std::cout, std::cerr);
}
