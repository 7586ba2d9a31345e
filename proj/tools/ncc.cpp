#include <iostream>

#include "ncc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return ncc::cli::run(args, std::cout, std::cerr);
}
