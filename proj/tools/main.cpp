#include <iostream>
#include <string>
#include <vector>

#include "edgepoly/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return edgepoly::run_cli(args, std::cout, std::cerr);
}
