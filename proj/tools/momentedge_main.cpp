#include <iostream>

#include "momentedge/cli.hpp"

int main(int argc, char** argv) {
    return momentedge::run_cli(argc, argv, std::cout, std::cerr);
}
