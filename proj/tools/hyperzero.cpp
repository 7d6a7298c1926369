#include <iostream>
#include <string>
#include <vector>

#include "hyperzero/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hyperzero::cli::main_entry(args, std::cout, std::cerr);
}
