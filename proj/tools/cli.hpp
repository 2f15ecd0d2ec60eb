#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pulsestream::cli {

enum ExitCode : int {
  kSuccess = 0,
  kValidation = 2,
  kResource = 3,
  kInternal = 4,
};

// Environment variable naming the directory that relative --output paths are
// resolved against.
inline constexpr const char* kOutputDirEnv = "PULSESTREAM_OUTPUT_DIR";

// Runs one command line (args excludes the program name). Results go to
// `out` unless --output is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace pulsestream::cli
