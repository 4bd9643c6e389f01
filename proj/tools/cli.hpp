#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace liesq::cli {

/// Run the command-line front end on the given arguments (without the
/// program name), writing to the given streams.  Returns the process
/// exit code: decision verdicts map to 0 (full) / 1 (proper) /
/// 2 (indeterminate), usage errors to 64, other failures to 70.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liesq::cli
