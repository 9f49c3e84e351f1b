#pragma once

#include <stdexcept>
#include <string>

namespace lcif {

// Argument outside the domain of an operation (bad index, size mismatch,
// violated ground-context bounds).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Input valid in type but violating an operation's precondition; the
// message names the offending sets.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input document could not be parsed.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& reason)
      : std::runtime_error("line " + std::to_string(line) + ": " + reason),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

// An enumeration would exceed the configured size budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lcif
