#include <iostream>

#include "locert/cli.hpp"

int main(int argc, char** argv) { return locert::cli::main_entry(argc, argv, std::cout, std::cerr); }
