#include <iostream>

#include "parbb/harness/cli.hpp"

int main(int argc, char** argv) { return parbb::harness::run_cli(argc, argv, std::cout, std::cerr); }
