/// Entry point: forwards the command line to run_cli.

#include <iostream>
#include <string>
#include <vector>

#include <nilpotra/cli.hpp>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nilpotra::run_cli(args, std::cout, std::cerr);
}
