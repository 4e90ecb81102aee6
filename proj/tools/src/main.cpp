#include <iostream>

#include "hyperspec/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return hyperspec::cli::run({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
}
