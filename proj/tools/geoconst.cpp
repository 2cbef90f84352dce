#include <iostream>
#include <string>
#include <vector>

#include "geoconst/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return geoconst::cli::run(args, std::cout, std::cerr);
}
