#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kirby {

// Full command-line surface, testable without a process boundary.
// args excludes the program name.  Exit codes: 0 success (or verdict
// "obstructed"), 1 negative mathematical verdict, 2 usage/parse/assertion
// error.  Data goes to `out`, diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace kirby
