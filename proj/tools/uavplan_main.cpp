#include <iostream>

#include "uavplan/io/cli.hpp"

int main(int argc, char** argv) { return uavplan::io::run_cli(argc, argv, std::cout, std::cerr); }
