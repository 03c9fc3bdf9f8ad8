#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gwl::cli {

inline constexpr int exit_pass = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

/// Runs one command line (args excludes the program name).  Returns 0 on
/// success, 1 on a mathematical failure, 2 on usage, I/O or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gwl::cli
