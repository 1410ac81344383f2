#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fqt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args excludes the program name). JSON goes to out
/// when --format json (the default); diagnostics go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fqt::cli
