#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dpdp::cli {

enum ExitCode : int {
    computed = 0,
    input_error = 1,
    consistency_failure = 2,
};

/// Entry point of the `dpdp` tool. `args` excludes the program name.
/// JSON verdicts go to `out`, diagnostics to `err`; "-" as a file reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace dpdp::cli
