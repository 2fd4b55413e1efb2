#include <iostream>

#include "cyclesplit/cli.hpp"

int main(int argc, char **argv) {
  return cyclesplit::cli::run(argc, argv, std::cout, std::cerr);
}
