#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace projlink::cli {

/// Exit statuses shared by every command.
inline constexpr int kOk = 0;
inline constexpr int kNo = 1;         // a domain "no" or a regression mismatch
inline constexpr int kBadInput = 2;   // unreadable, malformed or invalid input

/// Runs one command. args excludes the program name. JSON, DOT, PD or Gauss
/// output goes to out; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace projlink::cli
