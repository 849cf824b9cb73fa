#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sdyn::cli {

/// Exit codes: 0 all checks pass, 1 a check fails or a pole is hit,
/// 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sdyn::cli
