#include <iostream>

#include "ev/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ev::run(args, std::cout, std::cerr);
}
