#include <iostream>

#include "rblock/cli.hpp"

int main(int argc, char** argv) {
    return rblock::cli_main(argc, argv, std::cout, std::cerr);
}
