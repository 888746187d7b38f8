#include <iostream>
#include <string>
#include <vector>

#include "wjf/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return wjf::cli::run(args, std::cout, std::cerr);
}
