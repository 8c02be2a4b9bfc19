#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace motzhankel::cli {

/// Runs the command line tool with `args` (without the program name).
/// Returns the process exit status: 0 on success, 1 when a requested
/// check fails or the methods disagree, 2 on usage or domain errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Environment variable holding the path of the key = value config file.
inline constexpr const char* kConfigEnv = "MOTZHANKEL_CONFIG";

}  // namespace motzhankel::cli
