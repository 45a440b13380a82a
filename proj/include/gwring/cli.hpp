#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gwring::cli {

/// Runs one subcommand; `args` excludes the program name. Returns the exit
/// status: 0 on success, 1 on a failed verification, 2 on usage or input
/// errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gwring::cli
