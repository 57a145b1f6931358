#include <iostream>

#include "flatlas/cli.hpp"

int main(int argc, char** argv) {
    return flatlas::run_cli(argc, argv, std::cout, std::cerr);
}
