#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tropclosure {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-conformable operands.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Input outside an operation's domain: non-R-astic rows, infinite start
// vectors, violated preconditions.
class DomainError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class BudgetError : public Error {
 public:
  using Error::Error;
};

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

}  // namespace tropclosure
