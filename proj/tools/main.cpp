#include "liebranch/cli.hpp"

int main(int argc, char** argv) { return liebranch::cli_main(argc, argv); }
