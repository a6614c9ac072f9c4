#include <iostream>
#include <string>
#include <vector>

#include "fibhill/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return fibhill::cli_run(args, std::cout, std::cerr);
}
