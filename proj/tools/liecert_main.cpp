#include <iostream>
#include <string>
#include <vector>

#include "liecert/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return liecert::run(args, std::cout, std::cerr);
}
