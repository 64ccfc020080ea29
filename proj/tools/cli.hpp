#pragma once

// Command-line front end for the ulrichcalc binary.

#include <ostream>

namespace ulrichcalc::cli {

/// Runs one invocation. Exit codes: 0 all checks pass, 1 at least one
/// mismatch, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ulrichcalc::cli
