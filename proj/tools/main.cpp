#include <iostream>
#include <string>
#include <vector>

#include "aligncorr/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return aligncorr::run_cli(args, std::cout, std::cerr);
}
