#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wilf::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsage = 2;

// Entry point behind the `wilf` executable; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wilf::cli
