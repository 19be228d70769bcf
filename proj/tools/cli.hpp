#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pdm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitVerifyFailed = 2;

/// Runs one command. `args` excludes the program name. Data goes to `out`
/// (or the --out file); diagnostics and the effective parameter echo go to
/// `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pdm::cli
