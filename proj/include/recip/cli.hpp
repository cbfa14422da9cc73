#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace recip {

/// Entry point of the `recipgeo` tool. `args` excludes the program name.
/// Returns 0 on success, 1 when a verification check fails, 2 on usage
/// errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace recip
