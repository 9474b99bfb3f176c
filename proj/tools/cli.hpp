#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace radgen::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitVerificationFailed = 3;

inline constexpr int kSchemaVersion = 1;

// Entry point shared by the executable and the tests. `args` excludes the
// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace radgen::cli
