#include <iostream>
#include <string>
#include <vector>

#include "digitop/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return digitop::cli::run(args, std::cout, std::cerr);
}
