#include <iostream>

#include "m1n/cli.hpp"

int main(int argc, char **argv) {
  return m1n::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
