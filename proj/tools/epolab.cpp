#include <iostream>

#include "epolab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return epolab::run_cli(args, std::cout, std::cerr);
}
