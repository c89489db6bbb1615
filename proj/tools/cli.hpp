#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace demtype::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitValidation = 3;

/// Runs one command line. `args` excludes the program name. JSON, CSV and
/// help text go to `out` unless --out redirects them; errors go to `err` as a
/// single JSON object.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace demtype::cli
