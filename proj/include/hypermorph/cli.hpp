#pragma once

#include <iosfwd>

namespace hypermorph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // runtime or I/O failure
inline constexpr int kExitUsage = 2;

/// Entry point of the `hypermorph` tool; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hypermorph::cli
