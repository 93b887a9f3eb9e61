#pragma once

#include <iosfwd>

namespace hankelcert::cli {

/// Batch front end.  Subcommands: norm, certify, fold, refold, multiplier,
/// decompose, sharpness.  JSON (versioned with "schema": 1) goes to `out`;
/// diagnostics go to `err`.  Returns 0 on success, 2 when a verification or
/// certified bound fails to hold, 1 on usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hankelcert::cli
