#include <iostream>

#include "ffts/cli.hpp"

int main(int argc, char** argv) { return ffts::run_cli(argc, argv, std::cout, std::cerr); }
