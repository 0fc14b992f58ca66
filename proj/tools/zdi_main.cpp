#include <iostream>

#include "zdi/cli.hpp"

int main(int argc, char** argv) { return zdi::RunCli(argc, argv, std::cout, std::cerr); }
