#pragma once

// Command-line front end. Kept as a library function so tests can drive it
// without spawning processes.

#include <ostream>

namespace severi {

/// Exit codes: 0 success, 1 invalid input or arguments, 2 internal invariant violation.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace severi
