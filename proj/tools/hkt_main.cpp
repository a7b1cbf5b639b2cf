#include <iostream>
#include <vector>

#include "hkt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hkt::runCli(args, std::cout, std::cerr);
}
