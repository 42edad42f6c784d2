#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ramsey_lab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter lies outside its admissible domain (k < 3, p > 1, unknown vertex, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap (cycle count, search states, colorings) was exceeded.
class ResourceLimitError : public Error {
 public:
  ResourceLimitError(const std::string& what, std::uint64_t limit)
      : Error(what + " (limit " + std::to_string(limit) + ")"), limit_(limit) {}
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
};

/// A structural invariant of an input or of internal state does not hold.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// Experiment configuration is malformed; the message carries the field path.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace ramsey_lab
