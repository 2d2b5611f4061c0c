#include <iostream>
#include <string>
#include <vector>

#include "newman/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return newman::run_command(args, std::cout, std::cerr);
}
