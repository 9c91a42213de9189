#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  lauricella::cli::RunConfig cfg;
  if (auto code = lauricella::cli::parse_args(argc, argv, cfg, std::cout, std::cerr)) return *code;
  return lauricella::cli::run(cfg, std::cout, std::cerr);
}
