#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace horogrowth {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the mathematical input was violated
/// (zero denominator, negative coordinate, malformed automaton, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed its configured horizon or memory budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Text input could not be parsed. `position` is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Census data could not be fit by a polynomial of the allowed degree.
class FitError : public Error {
 public:
  using Error::Error;
};

}  // namespace horogrowth
