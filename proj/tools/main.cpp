#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  const auto r = pretop::cli::run_command({argv + 1, argv + argc});
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
