#include <unistd.h>

#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto r = handle3::run_cli(args, isatty(STDOUT_FILENO) != 0);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
