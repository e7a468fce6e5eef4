#include "cayley/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return cayley::run_cli(argc, argv, std::cout, std::cerr);
}
