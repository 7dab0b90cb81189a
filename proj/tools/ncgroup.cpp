#include <iostream>

#include "ncgroup/cli.hpp"

int main(int argc, char** argv) { return ncgroup::cli::run(argc, argv, std::cout, std::cerr); }
