#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wjf::cli {

// Runs one CLI invocation (argv without the program name) against the
// given streams.  Exit codes: 0 success, 1 verification failure or
// inconsistent data, 2 usage errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace wjf::cli
