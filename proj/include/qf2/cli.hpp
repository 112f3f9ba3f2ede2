#pragma once

#include <iosfwd>

namespace qf2 {

/// Exit codes: 0 ok, 1 verification failure, 2 input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qf2
