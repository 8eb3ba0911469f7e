#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rankstab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed bifiltration text. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A complex or filtration that violates face closure, monotonicity or uniqueness.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A line whose direction has a non-positive component.
class InadmissibleLineError : public Error {
 public:
  using Error::Error;
};

/// Caller broke an operation's precondition (dimension mismatch, u not below v, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace rankstab
