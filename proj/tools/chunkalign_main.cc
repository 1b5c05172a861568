#include <iostream>

#include "chunkalign/cli.h"

int main(int argc, char** argv) { return chunkalign::cli::run(argc, argv, std::cout, std::cerr); }
