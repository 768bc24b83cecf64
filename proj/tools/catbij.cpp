#include <iostream>

#include "catbij/cli.hpp"

int main(int argc, char** argv) { return catbij::run(argc, argv, std::cout, std::cerr); }
