#include <iostream>
#include <string>
#include <vector>

#include "splitbound/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return splitbound::cli::run(args, std::cout, std::cerr);
}
