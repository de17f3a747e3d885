#pragma once

#include <iosfwd>

namespace fixmahon::cli {

// Exit codes of run().
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsage = 2;

// Runs one command line (argv[0] is the program name). Reads the enumeration
// cap override from FIXMAHON_MAX_N.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fixmahon::cli
