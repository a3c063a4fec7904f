#pragma once

#include <stdexcept>
#include <string>

namespace qumode {

/// Invalid argument: bad index, mode, cutoff or parameter value.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An input violated a numerical contract (Hermiticity, unitarity, parity).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A truncated computation did not converge with respect to its cutoff.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qumode
