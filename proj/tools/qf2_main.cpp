#include "qf2/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return qf2::run_cli(argc, argv, std::cout, std::cerr); }
