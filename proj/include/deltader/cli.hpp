#pragma once

// Command-line front end. Exit codes: 0 success, 2 input error,
// 3 mathematical precondition failure.

#include <iosfwd>

namespace deltader {

int run_cli(int argc, const char* const* argv);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace deltader
