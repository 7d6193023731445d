#include <iostream>
#include <string>
#include <vector>

#include "blockq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return blockq::run_cli(args, std::cout, std::cerr);
}
