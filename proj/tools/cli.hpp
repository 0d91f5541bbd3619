// cli.hpp
//
// Command-line front end, separated from main() so tests can drive it with
// argument vectors and capture the streams.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace flcli {

// Parse and run one invocation; args excludes the program name. Exit code:
// 0 success, 1 usage error, 2 domain error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace flcli
