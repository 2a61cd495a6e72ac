#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scstar {

// Full command-line front end; args excludes the program name. Writes results
// to `out` and diagnostics to `err`. Exit codes: 0 success, 1 verification
// mismatch, 2 argument error, 3 capacity error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace scstar
