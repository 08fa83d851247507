#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace roughtop {

// Malformed or inconsistent input. Maps to CLI exit code 3.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A configured size cap (universe, enumeration, bijection) was exceeded.
class LimitError : public InputError {
 public:
  explicit LimitError(const std::string& what) : InputError(what) {}
};

// The inverse map of a rough group is not a function because some element
// has more than one rough inverse in G.
class AmbiguousInverseError : public InputError {
 public:
  explicit AmbiguousInverseError(const std::string& what) : InputError(what) {}
};

// Parser diagnostic carrying a 1-based source position.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                   message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A result the library guarantees by construction did not hold.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace roughtop
