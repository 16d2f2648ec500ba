#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace artin {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based, 0 when no line applies.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A precondition on the mathematical input was violated (unknown generator,
/// non-large label, mismatched presentations, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured resource limit was hit before the computation finished.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace artin
