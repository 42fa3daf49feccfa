#include <iostream>

#include "ppcount/cli.hpp"

int main(int argc, char** argv) { return ppcount::cli::run_cli(argc, argv, std::cout, std::cerr); }
