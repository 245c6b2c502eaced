#include <iostream>
#include <string>
#include <vector>

#include "qmra/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qmra::cli::dispatch(args, std::cout, std::cerr);
}
