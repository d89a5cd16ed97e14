#pragma once

#include <stdexcept>
#include <string>

namespace pnc {

/// Thrown when an argument violates an operation's precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The same-cluster constraints of a singular fade state cannot be met
/// without breaking the exclusive law (the state is not removable).
class ConstructionInfeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A map library does not select a removing map at one of its own states.
class InconsistentLibrary : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A high-SNR bound was requested below its validity threshold.
class OutOfValidityRange : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace pnc
