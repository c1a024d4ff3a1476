#pragma once

#include <istream>
#include <string>
#include <vector>

namespace grossone {

struct CommandResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// Exit codes: 0 success, 1 usage or syntax error, 2 domain error,
/// 3 abstention (Undecided, PrecisionExhausted).
namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int syntax = 1;
inline constexpr int domain = 2;
inline constexpr int abstained = 3;
} // namespace exit_code

/// Runs one command line (args excludes the program name). `repl` reads its
/// lines from `in`.
CommandResult run_command(const std::vector<std::string> &args, std::istream &in);
CommandResult run_command(const std::vector<std::string> &args);

} // namespace grossone
