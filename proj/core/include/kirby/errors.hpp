#ifndef KIRBY_ERRORS_HPP
#define KIRBY_ERRORS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace kirby {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input data is structurally invalid (bad generator index, bad group
/// table, dimension mismatch, ...).
class MalformedInputError : public Error {
 public:
  using Error::Error;
};

/// A documented operation precondition was violated by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An elementary move was rejected; the message names the violated clause.
class RejectedMoveError : public Error {
 public:
  explicit RejectedMoveError(const std::string& what) : Error(what) {}
  RejectedMoveError(const std::string& what, std::size_t move_index)
      : Error(what), move_index_(move_index) {}

  /// Index of the offending move inside a sequence, when known.
  std::optional<std::size_t> move_index() const { return move_index_; }

 private:
  std::optional<std::size_t> move_index_;
};

/// Text format error with a 1-based line/column position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace kirby

#endif  // KIRBY_ERRORS_HPP
