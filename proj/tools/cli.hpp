#pragma once

// Command-line front end. run_cli takes the arguments after the program name
// and returns what would be written to stdout and stderr.

#include <string>
#include <vector>

namespace handle3 {

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

// Exit codes: 0 ok, 1 domain or input error, 2 usage error.
CliResult run_cli(const std::vector<std::string>& args, bool is_tty = false);

}  // namespace handle3
