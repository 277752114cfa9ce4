#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skewqp {

/// Runs the command-line interface on the given arguments (without the
/// program name).  Exit code 0: all checks pass; 1: a mathematical check
/// failed; 2: input or schema error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace skewqp
