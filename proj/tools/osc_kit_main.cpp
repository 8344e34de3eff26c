#include <iostream>

#include "osc/cli.hpp"

int main(int argc, char** argv) { return osc::run_cli(argc, argv, std::cout, std::cerr); }
