#include <iostream>

#include "ad2mcrl2/cli/run.hpp"

int main(int argc, char** argv) {
  return ad2mcrl2::cli::main_with_args(argc, argv, std::cout, std::cerr);
}
