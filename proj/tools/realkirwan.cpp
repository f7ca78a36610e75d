#include "realkirwan/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return realkirwan::cli::run(argc, argv, std::cout, std::cerr); }
