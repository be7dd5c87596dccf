#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace baxter::cli {

inline constexpr int kOk = 0;
inline constexpr int kVerificationFailure = 1;
inline constexpr int kUsageError = 2;

/// Runs one `baxter_lab` subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace baxter::cli
