#include <iostream>

#include "cubictheta/cli.hpp"

int main(int argc, char** argv) {
  return cubictheta::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
