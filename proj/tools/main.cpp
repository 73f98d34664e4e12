#include <iostream>
#include <string>
#include <vector>

#include "hypermaps/io.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hypermaps::cli::run(args, std::cout, std::cerr);
}
