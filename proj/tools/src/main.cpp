#include <iostream>

#include "thinlayer/cli/commands.hpp"

int main(int argc, char** argv) { return thinlayer::cli::run(argc, argv, std::cout, std::cerr); }
