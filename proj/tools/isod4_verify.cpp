#include <iostream>

#include "isod4/cli.hpp"

int main(int argc, char **argv) { return isod4::cli::run(argc, argv, std::cout, std::cerr); }
