#include <iostream>
#include <string>
#include <vector>

#include "wordbound/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wordbound::run_cli(args, std::cout, std::cerr);
}
