#include <iostream>

#include "setorbits/cli.hpp"

int main(int argc, char** argv) { return setorbits::cli::run(argc, argv, std::cout, std::cerr); }
