#include <iostream>

#include "cyclix/cli.hpp"

int main(int argc, char** argv) { return cyclix::cli::run(argc, argv, std::cout, std::cerr); }
