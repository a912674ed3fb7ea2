#include <iostream>

#include "tropgroups/cli.hpp"

int main(int argc, char** argv) { return tropgroups::run_cli(argc, argv, std::cout, std::cerr); }
