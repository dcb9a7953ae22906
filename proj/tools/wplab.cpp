#include "wplab/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return wplab::cli::main(argc, argv, std::cout, std::cerr); }
