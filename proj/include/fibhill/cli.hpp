#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fibhill {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args[0] is the program name). Output goes to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 on domain errors and 2 on
/// usage errors.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fibhill
