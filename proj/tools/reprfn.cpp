#include <iostream>

#include "reprfn/cli.hpp"

int main(int argc, char** argv) {
  return reprfn::run_cli(argc, argv, std::cout, std::cerr);
}
