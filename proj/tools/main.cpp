#include <iostream>
#include <string>
#include <vector>

#include "feq/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv, argv + argc);
    return feq::cli::run(args, std::cout, std::cerr);
}
