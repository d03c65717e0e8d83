#pragma once

#include <stdexcept>
#include <string>

namespace expdio {

// Bad arguments or inputs outside an operation's domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation gave up within its configured effort (factoring, discrete log
// table size, primality certification). Never accompanied by a wrong answer.
class EffortExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An identity that must hold by construction failed. Indicates a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace expdio
