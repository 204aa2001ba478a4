#include <iostream>

#include "hooksph/cli.hpp"

int main(int argc, char** argv) { return hooksph::run_cli(argc, argv, std::cout, std::cerr); }
