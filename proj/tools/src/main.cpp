#include <iostream>

#include "artin/report.hpp"

int main(int argc, char** argv) {
  int code = 0;
  const auto config = artin::parse_command_line(argc, argv, std::cout, std::cerr, code);
  if (!config) return code;
  return artin::run(*config, std::cout, std::cerr);
}
