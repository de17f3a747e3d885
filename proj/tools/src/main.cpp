#include <iostream>

#include "fixmahon/cli.hpp"

int main(int argc, char** argv) {
    return fixmahon::cli::run(argc, argv, std::cout, std::cerr);
}
