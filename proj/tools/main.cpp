#include <iostream>
#include <string>
#include <vector>

#include "randic/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return randic::run_cli(args, std::cout, std::cerr, std::cin);
}
