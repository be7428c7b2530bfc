#include <iostream>

#include "sunstrip/cli.hpp"

int main(int argc, char** argv) {
  return sunstrip::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
