#pragma once

#include <stdexcept>
#include <string>

namespace qcgl {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in Q(q)") {}
};

// A generator index at or above the level being acted on.
class LevelError : public Error {
 public:
  using Error::Error;
};

// Rewriting did not terminate within the configured step budget.
class ReductionBudgetExceeded : public Error {
 public:
  using Error::Error;
};

// An iterated derivation did not vanish within the caller-supplied bound.
class NilpotenceBoundExceeded : public Error {
 public:
  using Error::Error;
};

class SpecError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace qcgl
