#include "geomove/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return geomove::run_cli(argc, argv, std::cout, std::cerr); }
