#include <iostream>
#include <string>
#include <vector>

#include "harris/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return harris::cli::run(args, std::cout, std::cerr, std::cin);
}
