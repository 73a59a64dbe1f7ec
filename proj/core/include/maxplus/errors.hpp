#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace maxplus {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit the operation (non-square, mismatched sizes).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition does not hold (e.g. the root condition fails).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A result failed its own post-condition check. Indicates a library bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// Malformed matrix or trace text. Positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace maxplus
