#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mconv::cli {

// Exit codes: 0 success, 1 domain error (error name on stderr), 2 usage or
// parse error. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mconv::cli
