#include <iostream>
#include <string>
#include <vector>

#include "twodist/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return twodist::cli::run(args, std::cout, std::cerr);
}
