#pragma once

#include <iosfwd>

namespace sse::cli {

enum ExitCode : int {
    accepted = 0,  // accept / found
    input_error = 1,
    rejected = 2,  // reject / refuted
    unknown = 3,   // unknown within bounds
};

/// Runs one command line. Artifacts go to `out` (or the --out file),
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sse::cli
