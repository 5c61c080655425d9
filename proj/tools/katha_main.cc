#include <iostream>
#include <string>
#include <vector>

#include "katha/cli.h"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return katha::cli::Run(std::vector<std::string>(argv, argv + argc), std::cin,
                         std::cout, std::cerr);
}
