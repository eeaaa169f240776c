#include <iostream>

#include "confembed_cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return confembed::cli::run(args, std::cout, std::cerr);
}
