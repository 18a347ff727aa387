#pragma once

#include <iosfwd>

namespace geomove {

/// The `geomove` command line. Returns the process exit code; module errors
/// print a diagnostic to `err` and return 1.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace geomove
