#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace auxnim {

/// A pile or auxiliary value exceeds the engine's configured cap.
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A persisted memo file contains a malformed line.
class CacheFormatError : public std::runtime_error {
 public:
  CacheFormatError(const std::string& what, std::size_t line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Output file could not be opened or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace auxnim
