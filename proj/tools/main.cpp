#include <iostream>

#include "entwine/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return entwine::cli::run(args, std::cout, std::cerr);
}
