#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace transit::cli {

/// Runs one command line (args exclude the program name). Exit codes: 0 on
/// success, 1 on usage errors, 2 on domain errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace transit::cli
