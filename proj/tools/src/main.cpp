#include <iostream>

#include "symkit_cli/commands.hpp"

int main(int argc, char** argv) { return symkit::cli::run(argc, argv, std::cout, std::cerr); }
