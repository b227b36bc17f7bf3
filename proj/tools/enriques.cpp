#include <iostream>
#include <string>
#include <vector>

#include "enriques/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return enriques::cli::run(args, std::cout, std::cerr);
}
