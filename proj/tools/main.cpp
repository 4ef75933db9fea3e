#include <iostream>

#include "cli.hpp"

int main(int argc, char **argv) {
  return soleknot::cli::dispatch({argv + 1, argv + argc}, std::cout, std::cerr);
}
