#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace holopois {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed polynomial, polyvector or structure-file text.
// Line and column are 1-based; line is 0 for single-line inputs.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t column, std::size_t line = 0)
      : Error(format(message, column, line)), message_(message), column_(column), line_(line) {}

  const std::string& bare_message() const noexcept { return message_; }
  std::size_t column() const noexcept { return column_; }
  std::size_t line() const noexcept { return line_; }

 private:
  static std::string format(const std::string& message, std::size_t column, std::size_t line) {
    std::string where = line > 0 ? "line " + std::to_string(line) + ", column " + std::to_string(column)
                                 : "column " + std::to_string(column);
    return "parse error at " + where + ": " + message;
  }

  std::string message_;
  std::size_t column_;
  std::size_t line_;
};

class UnknownIdentifier : public ParseError {
 public:
  UnknownIdentifier(const std::string& token, std::size_t column, std::size_t line = 0)
      : ParseError("unknown identifier \"" + token + "\"", column, line), token_(token) {}

  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

class ChartMismatch : public Error {
 public:
  ChartMismatch() : Error("operands live on different charts") {}
};

// A mathematical precondition does not hold (odd dimension, zero Pfaffian,
// non-homogeneous structure, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A configured resource cap (Groebner step budget, graded basis size) was hit.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace holopois
