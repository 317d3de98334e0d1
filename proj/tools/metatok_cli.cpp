#include "metatok/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return metatok::run_cli(argc, argv, std::cout, std::cerr); }
