#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace entwine::cli {

inline constexpr const char* version = "0.1.0";

/// Runs one command line (without the program name). Exit codes: 0 when a
/// verdict was computed, 1 when an input structure fails validation, 2 on
/// usage, parse or I/O errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace entwine::cli
