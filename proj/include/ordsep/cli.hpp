#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ordsep {

/// Runs one CLI invocation (args excludes the program name). Returns the
/// process exit code: 0 on success (verdicts live in the output), 2 on
/// malformed input, 3 on internal inconsistency.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace ordsep
