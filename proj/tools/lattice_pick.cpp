#include "lattice_pick/commands.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return lattice_pick::cli::run(argc, argv, std::cout, std::cerr);
}
