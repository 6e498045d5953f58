#include <iostream>

#include "hypermorph/cli.hpp"

int main(int argc, char** argv) {
  return hypermorph::cli::run(argc, argv, std::cout, std::cerr);
}
