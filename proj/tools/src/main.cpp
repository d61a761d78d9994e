#include <iostream>

#include "hring_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hring::cli::run(args, std::cout, std::cerr);
}
