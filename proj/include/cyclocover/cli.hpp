#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclocover {

// Runs one CLI invocation (args excludes the program name).  Subcommands:
//   basis --p P --l L --m M [--method cq1|klein|generic]
//   periods --q Q --basis natural|chord-slide|schindler|klein
//           --construction direct|closed-form|recurrence
//           [--format json|latex|text] [--numeric BITS]
//   verify --g G [--precision BITS]
//   identity --q Q
// Returns 0 on success, 1 when a requested check fails, 2 on usage errors
// (single-line diagnostic on err).  CYCLOCOVER_PRECISION overrides the
// default 128-bit numeric precision.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace cyclocover
