#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace biplane::cli {

// Exit codes.
constexpr int kOk = 0;
constexpr int kFailed = 1;  // validation failure, refutation of a structural claim, bad input
constexpr int kTimeout = 2;
constexpr int kUsage = 64;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace biplane::cli
