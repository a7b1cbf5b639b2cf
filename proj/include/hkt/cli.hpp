#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hkt {

/// Runs the command-line interface on the given arguments (excluding argv[0]).
/// Exit codes: 0 success, 1 semantic failure, 2 usage or parse error.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hkt
