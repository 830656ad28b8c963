#include <iostream>

#include "olb/cli.hpp"

int main(int argc, char** argv) { return olb::run_cli(argc, argv, std::cout, std::cerr); }
