// Command-line front end: parses a subcommand and its flags, runs the check,
// writes the JSON report and a short summary.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qgr {

/// Exit status: 0 when every check passes, 1 when one fails, 2 on a usage
/// or configuration error. The JSON report goes to `out` (or the --out
/// file, in which case the summary goes to `out`); the summary and error
/// messages go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qgr
