#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace netmx::cli {

inline constexpr const char* tool_version = "1.0.0";

enum ExitCode : int
{
    exit_ok = 0,
    exit_unsound = 1,
    exit_usage = 2,
};

/// Runs the `netmx` command line. args[0] is the program name.
/// Subcommands: compute, audit, gen, hunt, catalogue.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace netmx::cli
