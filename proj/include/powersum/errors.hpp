#pragma once

#include <stdexcept>
#include <string>

namespace powersum {

/// Caller bug: an argument outside an operation's stated precondition.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A formula evaluated outside the range of k it is valid for.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Request refused because it exceeds the configured resource ceiling.
class CeilingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact computation that must produce an integer did not.
/// Always an internal bug; never rounded away.
class IntegralityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Exact polynomial division left a nonzero remainder.
class InexactDivisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace powersum
