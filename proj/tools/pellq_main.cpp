#include <iostream>
#include <string>
#include <vector>

#include "pellq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pellq::cli::run(args, std::cout, std::cerr);
}
