#include <iostream>

#include "tlbasis/cli.hpp"

int main(int argc, char** argv) { return tlbasis::cli::run(argc, argv, std::cout, std::cerr); }
