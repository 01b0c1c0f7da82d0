#include <iostream>

#include "kusub/cli.hpp"

int main(int argc, char** argv) { return kusub::run(argc, argv, std::cout, std::cerr); }
