#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nsg::cli {

enum ExitCode : int {
    kOk = 0,
    kInvalidInput = 2,
    kBoundExceeded = 3,
    kMismatch = 4,
};

/// Soft limits; larger requests exit with kBoundExceeded.
inline constexpr int kScanMaxGenus = 16;
inline constexpr int kScanMaxFrobenius = 24;
inline constexpr int kEnumerateMaxGenus = 25;
inline constexpr int kEnumerateMaxFrobenius = 40;

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nsg::cli
