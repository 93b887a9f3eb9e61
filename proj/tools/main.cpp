#include <iostream>

#include "hankelcert/cli.hpp"

int main(int argc, char** argv) {
  return hankelcert::cli::run(argc, argv, std::cout, std::cerr);
}
