#pragma once

#include <stdexcept>
#include <string>

namespace subst {

// Malformed input (share-strings, permutations, option values).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation exceeded a configured resource budget. Retryable with a
// larger budget; says nothing about the mathematics.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The input does not satisfy a mathematical precondition of the requested
// analysis (not primitive, not recognizable, ...).
class Refused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact decisions are only made up to a configured polynomial degree.
class UndecidedExact : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal invariant broken; always a bug.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace subst
