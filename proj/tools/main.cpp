#include <iostream>

#include "rhotensor/cli.hpp"

int main(int argc, char** argv) { return rhotensor::cli::run(argc, argv, std::cout, std::cerr); }
