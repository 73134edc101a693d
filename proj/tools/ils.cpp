// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Informledge Contributors

#include <iostream>
#include <string>
#include <vector>

#include "ils/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return ils::cli::run(args, std::cout, std::cerr);
}
