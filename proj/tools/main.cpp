#include <iostream>
#include <string>
#include <vector>

#include "satkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return satkit::run_cli(args, std::cout, std::cerr);
}
