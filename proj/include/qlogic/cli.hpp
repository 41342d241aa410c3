#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qlogic/report.hpp"

namespace qlogic {

/// Runs one command line (without the program name). Writes the text or
/// JSON report to `out`, diagnostics to `err`, and returns the exit status.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace qlogic
