#include <iostream>

#include "brauer/cli.hpp"

int main(int argc, char** argv) { return brauer::run_cli(argc, argv, std::cout, std::cerr); }
