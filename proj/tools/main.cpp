#include "basetwo/cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return basetwo::cli::run_cli(argc, argv, std::cout, std::cerr); }
