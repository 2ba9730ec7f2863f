#pragma once

// Command line front end: table emission, identity verification and Monte
// Carlo estimation with machine-readable CSV / JSON-lines output.
//
// Exit codes: 0 success (all selected checks pass), 1 at least one identity
// failed or diverged, 2 usage error.

#include <iosfwd>
#include <string>
#include <vector>

namespace probfubini::cli {

// argv-style entry point (without the program name); writes to the supplied
// streams so tests can capture output byte-for-byte.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace probfubini::cli
