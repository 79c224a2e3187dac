#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace varreg {

// Parses and dispatches one command.  JSON goes to `out`, diagnostics to
// `err`.  Exit codes: 0 success, 1 invalid input, 2 numerical failure,
// 3 verification failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace varreg
