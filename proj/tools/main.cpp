#include <iostream>

#include "twofield_cli.hpp"

int main(int argc, char** argv) {
  return twofield::cli::main_entry(argc, argv, std::cout, std::cerr);
}
