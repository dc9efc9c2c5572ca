#include <iostream>
#include <string>
#include <vector>

#include "hkmult/cli/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hkm::cli::runCommand(args, std::cout, std::cerr);
}
