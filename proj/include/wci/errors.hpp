#pragma once

#include <stdexcept>
#include <string>

namespace wci {

// Malformed input or a violated call precondition (bad argument shape, unparsable text).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The input is well-formed but the mathematical precondition of the
// operation does not hold (linear cone, ill-formed ambient space, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace wci
