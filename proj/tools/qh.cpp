#include "qh/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return qh::run_cli(argc, argv, std::cout, std::cerr); }
