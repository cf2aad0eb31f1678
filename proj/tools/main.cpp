#include <iostream>

#include "cli_app.hpp"

int main(int argc, char** argv) {
  return cyclicity::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
