#include "eisen/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return eisen::cli::run(argc, argv, std::cout, std::cerr); }
