// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mock3d {

// Runs the command line tool. `args` excludes the program name. Returns 0 on
// success and 2 on any usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace mock3d
