#include <iostream>

#include "vlic/cli.hpp"

int main(int argc, char** argv) { return vlic::cli::run(argc, argv, std::cout, std::cerr); }
