#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lamcount {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Raised by exact recurrences whose division must be exact. Seeing one
// means the implementation is wrong, not the input.
class DivisibilityViolation : public Error {
 public:
  using Error::Error;
};

class NonIntegerResult : public Error {
 public:
  using Error::Error;
};

class NoRootBracketed : public Error {
 public:
  using Error::Error;
};

class IndexPatternUnsupported : public Error {
 public:
  using Error::Error;
};

class MalformedInput : public Error {
 public:
  using Error::Error;
};

class NotNeutral : public Error {
 public:
  using Error::Error;
};

class NoImage : public Error {
 public:
  using Error::Error;
};

class NotClosed : public Error {
 public:
  using Error::Error;
};

}  // namespace lamcount
