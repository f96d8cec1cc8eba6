#include "cliquebound/cli.hpp"

#include <iostream>

int main(int argc, char **argv) { return cliquebound::cli::run(argc, argv, std::cout, std::cerr); }
