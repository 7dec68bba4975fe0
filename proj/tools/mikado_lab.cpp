#include <iostream>

#include "mikado/lab.hpp"

int main(int argc, char** argv) { return mikado::run_cli(argc, argv, std::cout, std::cerr); }
