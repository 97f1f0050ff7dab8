#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ncode/code.hpp"

namespace ncode::cli {

/// Exit statuses of the command-line tool.
inline constexpr int kOk = 0;
inline constexpr int kError = 1;
inline constexpr int kMismatch = 2;

/// Runs the tool with argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "{1,2,3}", "{}" for the empty word.
std::string braced(Codeword w);

}  // namespace ncode::cli
