#pragma once

#include <stdexcept>
#include <string>

namespace peno {

// Filesystem trouble: missing files, failed writes.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input content; message carries "path:line" context.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numerical breakdown (non-finite likelihood or parameters).
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline ParseError parse_error(const std::string& path, long line, const std::string& what) {
  return ParseError(path + ":" + std::to_string(line) + ": " + what);
}

}  // namespace peno
