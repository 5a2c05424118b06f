#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sturm::cli {

/// Runs one command line (args excludes the program name). Exit codes: 0 ok,
/// 1 parse error, 2 domain error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sturm::cli
