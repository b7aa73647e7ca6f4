#pragma once

#include <stdexcept>
#include <string>

namespace haken {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (unknown simplex, parameter below a minimum, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed text input (complex, pattern or ledger files).
class FormatError : public Error {
 public:
  FormatError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A patterned complex violates the boundary-pattern axioms.
class PatternError : public Error {
 public:
  using Error::Error;
};

/// A cut locus is not admissible (not full, not proper, not transverse).
class CutError : public Error {
 public:
  using Error::Error;
};

/// A search exceeded its configured resource budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace haken
