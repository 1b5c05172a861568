#ifndef CHUNKALIGN_CLI_H_
#define CHUNKALIGN_CLI_H_

#include <iosfwd>

namespace chunkalign::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitFormat = 4;

// Runs one `chunkalign` invocation. Diagnostics go to `err` as one line.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chunkalign::cli

#endif  // CHUNKALIGN_CLI_H_
