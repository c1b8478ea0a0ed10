#include <iostream>

#include "ncjacobi/cli.hpp"

int main(int argc, char** argv) { return ncjacobi::cli::run(argc, argv, std::cout, std::cerr); }
