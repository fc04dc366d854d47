#include <iostream>

#include "cli_app.hpp"

int main(int argc, char** argv) {
  return cgp::cli::run_command_line(argc, argv, std::cout, std::cerr);
}
