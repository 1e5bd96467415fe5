#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace glprover {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula text. `position` is the 0-based byte offset of the
/// offending token.
class ParseError : public Error {
 public:
  enum class Kind { Syntax, UnknownToken };

  ParseError(Kind kind, std::size_t position, const std::string& message);

  Kind kind() const noexcept { return kind_; }
  std::size_t position() const noexcept { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

/// A configured ceiling (search steps, evaluation count, enumeration size)
/// would be exceeded.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// The caller broke a documented precondition (unknown world, inconsistent
/// seed list, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed model, proof or derivation document.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A self-check inside the library failed. Always a library bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace glprover
