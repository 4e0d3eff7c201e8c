#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace exactroot {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called with arguments that violate its contract.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A brute-force engine was asked to go beyond its size budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input. `position()` is a byte offset for graph6,
/// a 1-based line number for edge lists and unused (0) for JSON, whose
/// messages carry a JSON pointer instead.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace exactroot
