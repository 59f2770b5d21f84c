#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace predkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (args excludes the program name). The summary goes to
// `out`, errors to `err`, and machine artifacts to the --out path.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace predkit::cli
