#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fsw::cli {

// Dispatches one invocation. Exit status: 0 success, 1 domain error,
// 2 usage error. All machine output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fsw::cli
