#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lmpe::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 2,
    exit_data_format = 3,
    exit_decode_failure = 4,
    exit_search_failure = 5,
};

/// Runs the command line `args` (without the program name).  Standard input
/// is read from `in` where a subcommand streams data.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lmpe::cli
