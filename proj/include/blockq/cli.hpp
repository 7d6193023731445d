#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "blockq/oracle.hpp"

namespace blockq {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // a verification or analysis assertion failed
inline constexpr int kExitUsage = 2;   // bad flags, missing files, malformed input

// "x0,y0,x1,y1" with 0 <= x0 < x1, 0 <= y0 < y1. Throws UsageError.
Window parse_window(const std::string& text);

// "x1,y1;x2,y2;..." with non-negative coordinates; duplicates are rejected.
// An empty string is the empty set. Throws UsageError.
BlockedSet parse_blocked(const std::string& text);

// Runs one command line (without the program name). Machine-readable results
// go to `out`, human-readable logs and errors to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blockq
