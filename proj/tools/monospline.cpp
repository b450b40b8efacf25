#include <iostream>

#include "monospline/cli.hpp"

int main(int argc, char** argv) { return monospline::run_cli(argc, argv, std::cout, std::cerr); }
