#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pcompact::cli {

// Exit codes: 0 success, 1 computation or verification failure, 2 usage error.
// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pcompact::cli
