#include <iostream>
#include <string>
#include <vector>

#include "hamsym/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hamsym::run_cli(args, std::cin, std::cout, std::cerr);
}
