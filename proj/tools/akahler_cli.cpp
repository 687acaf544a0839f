#include <iostream>

#include "akahler/cli.hpp"

int main(int argc, char** argv) {
  return akahler::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
