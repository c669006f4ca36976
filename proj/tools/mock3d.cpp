// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "mock3d/cli.hpp"

int main(int argc, char** argv) {
  return mock3d::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
