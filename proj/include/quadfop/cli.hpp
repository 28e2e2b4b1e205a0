#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quadfop::cli {

// Exit codes: 0 success, 1 runtime failure, 2 configuration error.
// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quadfop::cli
