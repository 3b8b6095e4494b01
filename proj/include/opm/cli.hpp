#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace opm::cli {

/// Runs the command line given as argv-style arguments (program name not
/// included). Returns the process exit code: 0 on success, nonzero on any
/// parse or evaluation error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace opm::cli
