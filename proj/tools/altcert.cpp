#include <iostream>

#include "altcert/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto r = altcert::run_cli(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
