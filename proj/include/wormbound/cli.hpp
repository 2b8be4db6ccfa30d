#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wormbound::cli {

enum ExitCode : int {
    kOk = 0,
    kInternalError = 1,
    kCertificationFailed = 2,
    kInvalidArguments = 3,
};

/// Parses argv (argv[0] is the program name), runs the subcommand and prints
/// one JSON object on `out`. Diagnostics go to `err`.
int dispatch(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace wormbound::cli
