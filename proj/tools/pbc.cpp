#include <iostream>

#include "pbc/cli.hpp"

int main(int argc, char** argv) { return pbc::dispatch(argc, argv, std::cout, std::cerr); }
