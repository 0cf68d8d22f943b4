#include <iostream>

#include "rmaap/cli.hpp"

int main(int argc, char** argv) { return rmaap::cli::run(argc, argv, std::cout, std::cerr); }
