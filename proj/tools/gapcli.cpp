#include <iostream>

#include "gap/cli.hpp"

int main(int argc, char** argv) { return gap::run_cli(argc, argv, std::cout, std::cerr); }
