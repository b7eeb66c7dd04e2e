#include <iostream>

#include "cactus/cli.hpp"

int main(int argc, char** argv) {
  return cactus::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
