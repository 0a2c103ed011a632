#include <iostream>
#include <string>
#include <vector>

#include "treecross/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return treecross::cli::run(args, std::cout, std::cerr);
}
