#pragma once

#include <iosfwd>

namespace trigrid::cli {

/// Entry point shared by the executable and the tests. Returns the process
/// exit code: 0 when every requested check passed, 1 on a failed check or
/// runtime error, 2 on a usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace trigrid::cli
