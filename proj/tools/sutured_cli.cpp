#include <iostream>

#include "sutured/cli.hpp"

int main(int argc, char** argv) { return sutured::run_cli(argc, argv, std::cout, std::cerr); }
