#include "salemkit/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return salemkit::run_cli(argc, argv, std::cout, std::cerr); }
