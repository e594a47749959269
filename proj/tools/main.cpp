#include <iostream>

#include "germkit/cli.hpp"

int main(int argc, char** argv) { return germkit::cli::run(argc, argv, std::cout, std::cerr); }
