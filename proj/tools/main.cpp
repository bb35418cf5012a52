#include <iostream>

#include "bint/cli.hpp"

int main(int argc, char** argv) {
  return bint::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
