#include <iostream>

#include "hd/cli.hpp"

int main(int argc, char** argv) { return hd::cli::run(argc, argv, std::cout, std::cerr); }
