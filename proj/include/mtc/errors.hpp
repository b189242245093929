#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mtc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain: mismatched fields or profiles,
/// an unmet structural precondition, a reducible modulus, and so on.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// An enumeration would exceed its configured codeword budget.
class BudgetExceeded : public Error {
  public:
    using Error::Error;
};

/// Malformed textual input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
  public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(format(what, line, column)), line_(line), column_(column), message_(what) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }

  private:
    static std::string format(const std::string& what, std::size_t line, std::size_t column) {
        if (line == 0) return column == 0 ? what : "column " + std::to_string(column) + ": " + what;
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
    }

    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

}  // namespace mtc
