#include <iostream>

#include "slopestab/report.hpp"

int main(int argc, char** argv) { return slopestab::run_cli(argc, argv, std::cout, std::cerr); }
