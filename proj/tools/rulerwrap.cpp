#include <iostream>

#include "rulerwrap/cli.hpp"

int main(int argc, char** argv) {
    return rulerwrap::cli::dispatch(argc, argv, std::cin, std::cout, std::cerr);
}
