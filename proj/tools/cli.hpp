#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace edgepoly::cli {

// Runs `edgepoly <args...>` (args excludes the program name). Exit codes:
// 0 completed, 2 usage error, 3 input error, 4 vertex cap exceeded.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace edgepoly::cli
