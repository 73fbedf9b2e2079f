#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace drg::cli {

// Exit codes: 0 success/consistent, 1 input or usage error, 2 the analyze
// pipeline found a spectral/combinatorial inconsistency.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace drg::cli
