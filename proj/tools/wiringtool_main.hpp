#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wiringtool {

// Exit codes: 0 success, 2 usage or input errors, 3 resource guard tripped.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wiringtool
