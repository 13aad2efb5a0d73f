#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace igt::cli {

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. Returns 0 when the computation finished, 2 for
/// usage or validation errors and 3 when an enumeration cap was hit.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace igt::cli
