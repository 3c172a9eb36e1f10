#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quasibraid::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;

// args excludes the program name. Output goes to `out`; usage errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quasibraid::cli
