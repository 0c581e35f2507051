#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gt {

/// Runs one CLI invocation (args exclude the program name) writing to the
/// given streams. Returns the process exit code: 0 on success, 1 on usage or
/// input errors, 2 when verification fails or a witness does not replay.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace gt
