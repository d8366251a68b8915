#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace axial {

// Exit codes: 0 every selected check passes, 1 some check fails, 2 the
// input was rejected before any check ran.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace axial
