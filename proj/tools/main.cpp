#include <iostream>

#include "potkit/cli.hpp"

int main(int argc, char** argv) { return potkit::cli::run(argc, argv, std::cout, std::cerr); }
