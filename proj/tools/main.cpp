#include <iostream>

#include "qlogic/cli.hpp"

int main(int argc, char** argv) {
  return qlogic::run_cli({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
}
