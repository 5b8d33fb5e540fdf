#include "distprod/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return distprod::run_cli(args, std::cout, std::cerr);
}
