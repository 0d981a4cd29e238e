#include <iostream>

#include "modrep/cli.hpp"

int main(int argc, char** argv) {
  return modrep::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
