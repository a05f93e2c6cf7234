#include <iostream>

#include "coreseq/cli.hpp"

int main(int argc, char** argv) { return coreseq::run_cli(argc, argv, std::cout, std::cerr); }
