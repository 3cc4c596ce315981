#include <iostream>
#include <string>
#include <vector>

#include "tilingdet/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tilingdet::cli::run(args, std::cout, std::cerr);
}
