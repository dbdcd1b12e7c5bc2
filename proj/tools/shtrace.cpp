#include "shtrace/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return shtrace::cli::run(std::move(args), std::cout, std::cerr);
}
