#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symfam {

// Every error raised by the library derives from Error. The CLI maps
// DomainError (and subclasses) to exit code 2 and CapabilityError to 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad parameters or inputs.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Two operands live over different universes.
class UniverseMismatch : public DomainError {
 public:
  UniverseMismatch(int lhs, int rhs)
      : DomainError("universe mismatch: n=" + std::to_string(lhs) +
                    " vs n=" + std::to_string(rhs)) {}
};

// A requested level lies outside the range of a measure function.
class UnreachableLevel : public DomainError {
 public:
  using DomainError::DomainError;
};

// Input violates a documented precondition of a verifier (for example a
// proof-chain check on a family that is not 3-wise intersecting).
class NotApplicable : public DomainError {
 public:
  using DomainError::DomainError;
};

// A function argument broke its contract in a way detected at run time
// (non-monotone measure curve).
class ContractViolation : public DomainError {
 public:
  using DomainError::DomainError;
};

class ParseError : public DomainError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : DomainError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Size or time budget exceeded, or an operation is not available at this
// scale (brute-force automorphisms beyond n = 8, explicit families beyond
// n = 24, ...).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

}  // namespace symfam
