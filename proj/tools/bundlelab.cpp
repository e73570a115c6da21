#include <iostream>

#include "bundlelab_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bundlelab::cli::run_cli(args, std::cout, std::cerr);
}
