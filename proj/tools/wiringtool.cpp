#include <iostream>
#include <string>
#include <vector>

#include "wiringtool_main.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wiringtool::run(args, std::cout, std::cerr);
}
