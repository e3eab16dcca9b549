#include <iostream>
#include <string>
#include <vector>

#include "sedfkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sedfkit::run_cli(args, std::cin, std::cout, std::cerr);
}
