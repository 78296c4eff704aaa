#include <iostream>

#include "twd/cli.hpp"

int main(int argc, char** argv) {
    return twd::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
