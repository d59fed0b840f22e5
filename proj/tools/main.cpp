#include <iostream>
#include <string>
#include <vector>

#include "graphmon/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return graphmon::run(args, std::cin, std::cout, std::cerr);
}
