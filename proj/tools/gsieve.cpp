#include <iostream>
#include <string>
#include <vector>

#include "gsieve/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return gsieve::cli::run(args, std::cout, std::cerr);
}
