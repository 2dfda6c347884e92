#include <iostream>
#include <string>
#include <vector>

#include "ocagen/cli.h"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  std::vector<std::string> args(argv + 1, argv + argc);
  return ocagen::cli::run(std::move(args), std::cout, std::cerr);
}
