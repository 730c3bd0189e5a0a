// Command-line front end. Exit codes: 0 success, 1 flag/configuration
// error, 2 I/O failure.

#pragma once

#include <iosfwd>

namespace momentedge {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace momentedge
