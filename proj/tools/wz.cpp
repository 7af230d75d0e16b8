#include "wz/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return wz::cli::dispatch(argc, argv, std::cout, std::cerr); }
