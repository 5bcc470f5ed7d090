#include <iostream>

#include "jeskit/cli.hpp"

int main(int argc, char** argv) { return jeskit::cli::run_cli(argc, argv, std::cout, std::cerr); }
