#include <iostream>
#include <string>
#include <vector>

#include "metric_lines/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return metric_lines::cli::run(args, std::cin, std::cout, std::cerr);
}
