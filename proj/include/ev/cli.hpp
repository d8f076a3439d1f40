#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ev {

// Exit codes: 0 success (a hard verdict is a success), 2 bad input, 3 size limit.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ev
