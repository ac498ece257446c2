#include <iostream>
#include <string>
#include <vector>

#include "chordal/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return chordal::cli::run(args, std::cout, std::cerr);
}
