#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace loopkit {

/// Base class for every error raised by loopkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a raw table cannot be turned into a loop.
class ValidationError : public Error {
 public:
  enum class Kind { NonSquareInput, EntryOutOfRange, NotLatinSquare, NoIdentityElement };

  ValidationError(Kind kind, std::string message) : Error(std::move(message)), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Malformed table file (bad header, wrong row length, non-integer token).
class FormatError : public Error {
 public:
  FormatError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ParseError : public Error {
 public:
  enum class Kind { SyntaxError, UnbalancedParentheses, UnknownToken };

  ParseError(Kind kind, std::size_t position, const std::string& message)
      : Error(message + " at position " + std::to_string(position)), kind_(kind), position_(position) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t position() const noexcept { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(char name)
      : Error(std::string("unbound variable '") + name + "'"), name_(name) {}

  char name() const noexcept { return name_; }

 private:
  char name_;
};

class UnknownIdentity : public Error {
 public:
  using Error::Error;
};

class NotASubloop : public Error {
 public:
  using Error::Error;
};

class NotNormal : public Error {
 public:
  using Error::Error;
};

class OrderMismatch : public Error {
 public:
  using Error::Error;
};

/// A search ran out of its node or time budget before finishing.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace loopkit
