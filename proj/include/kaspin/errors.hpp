#pragma once

#include <stdexcept>
#include <string>

namespace kaspin {

// Signature outside what the called operation supports (odd d, d > 8,
// p - q not in {0, 2} for representation work, or mismatched operands).
class SignatureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed external input (JSON, CLI parameter strings).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Caller-supplied data violates a documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Evaluation point outside the chart domain, or a stencil leaving it.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An internal construction failed its own post-condition check.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace kaspin
