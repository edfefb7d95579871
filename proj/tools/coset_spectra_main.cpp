// Entry point for the coset-spectra command-line tool.
#include <iostream>
#include <string>
#include <vector>

#include "coset/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return coset::run_cli(args, std::cout, std::cerr);
}
