#include <iostream>

#include "cscnilm/commands.hpp"

int main(int argc, char** argv) {
  return cscnilm::run_cli(argc, argv, std::cout, std::cerr);
}
