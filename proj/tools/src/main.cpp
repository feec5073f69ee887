#include <iostream>

#include "eoa_cli/cli.hpp"

int main(int argc, char** argv) {
  return eoa::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
