#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rgiso {

/// Runs the command-line interface against `args` (program name excluded).
/// Returns the process exit code: 0 on success, 1 on solver/property/file
/// failure, 2 on usage error.
int cli_run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace rgiso
