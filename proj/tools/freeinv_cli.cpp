#include <iostream>

#include "freeinv/cli.hpp"

int main(int argc, char** argv) { return freeinv::run_cli(argc, argv, std::cout, std::cerr); }
