#include "wigner/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return wigner::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
