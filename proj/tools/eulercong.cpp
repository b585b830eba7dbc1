#include "eulercong/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return eulercong::cli::run(argc, argv, std::cout, std::cerr); }
