#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hkm::cli {

/// Runs one CLI invocation (args excludes the program name). The JSON report
/// goes to `out`, a human-readable summary to `err`.
/// Exit status: 0 success, 1 invalid input, 2 internal contract violation
/// (including a failed `verify` check).
int runCommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hkm::cli
