#include <iostream>

#include "varreg/cli.hpp"

int main(int argc, char** argv) {
    return varreg::run_cli(argc, argv, std::cout, std::cerr);
}
