#pragma once

#include <string>
#include <vector>

namespace liebranch {

struct CliResult {
  int status = 0;
  std::string out;  // stdout payload
  std::string err;  // error/diagnostic payload
};

// Runs one command line (excluding argv[0]); used directly by the tests.
CliResult run_cli(const std::vector<std::string>& args);

// Entry point for the binary: prints out/err and returns the status.
int cli_main(int argc, char** argv);

}  // namespace liebranch
