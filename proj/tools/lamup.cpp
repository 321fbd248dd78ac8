#include <iostream>
#include <string>
#include <vector>

#include "lamup/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lamup::cli::run(args, std::cin, std::cout, std::cerr);
}
