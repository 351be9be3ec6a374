#include <iostream>

#include "kaspin/cli/cli.hpp"

int main(int argc, char** argv) { return kaspin::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
