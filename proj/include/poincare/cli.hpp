#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace poincare::cli {

// Exit codes: 0 success, 1 computation-envelope violation, 2 argument error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitEnvelope = 1;
inline constexpr int kExitUsage = 2;

// Full command driver; `args` excludes the program name. Reports go to `out`
// unless --out redirects them to a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace poincare::cli
