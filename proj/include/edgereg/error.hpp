#pragma once

#include <stdexcept>
#include <string>

namespace edgereg {

// Base of every error raised by the library. The C API maps each subclass to
// a distinct status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (graph6, JSON).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte offset " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A size guard was exceeded. Guards can be lifted with an explicit override.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Bad request at the harness level, e.g. an unknown check id.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace edgereg
