#include <iostream>
#include <string>
#include <vector>

#include "kirbyspin/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kirby::dispatch(args, std::cout, std::cerr);
}
